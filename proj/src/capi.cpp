#include "incalg/incalg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "incalg/json_io.hpp"
#include "incalg/selfcheck.hpp"

struct incalg_poset {
  incalg::Poset poset;
};

struct incalg_field {
  incalg::Field field;
};

namespace {

using incalg::ErrorKind;
using incalg::io::json;

thread_local std::string last_error;
thread_local std::string last_kind;

incalg_status code_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::HypothesisFailed: return INCALG_E_HYPOTHESIS;
    case ErrorKind::Char2Unsupported: return INCALG_E_CHAR2;
    case ErrorKind::Internal: return INCALG_E_INTERNAL;
    default: return INCALG_E_INPUT;
  }
}

template <class Fn>
incalg_status guarded(Fn&& fn) {
  last_error.clear();
  last_kind.clear();
  try {
    return fn();
  } catch (const incalg::Error& e) {
    last_error = e.what();
    last_kind = incalg::to_string(e.kind());
    return code_of(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("ParseError: ") + e.what();
    last_kind = "ParseError";
    return INCALG_E_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    last_kind = "Internal";
    return INCALG_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    last_kind = "Internal";
    return INCALG_E_INTERNAL;
  }
}

incalg_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  last_kind = "InvalidArgument";
  return INCALG_E_INPUT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) {
  if (out) *out = dup(j.dump(2));
}

json parse_text(const char* text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    incalg::fail(ErrorKind::ParseError, e.what());
  }
}

incalg::ContextPtr context(const incalg_poset* p, const incalg_field* k) { return incalg::make_context(p->poset, k->field); }

}  // namespace

extern "C" {

const char* incalg_last_error(void) { return last_error.c_str(); }
const char* incalg_last_error_kind(void) { return last_kind.c_str(); }
const char* incalg_version(void) { return "1.0.0"; }

void incalg_free_string(char* s) { std::free(s); }

incalg_status incalg_poset_parse(const char* text, incalg_poset** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new incalg_poset{incalg::io::parse_poset(text)};
    return INCALG_OK;
  });
}

void incalg_poset_free(incalg_poset* p) { delete p; }

size_t incalg_poset_size(const incalg_poset* p) { return p ? p->poset.size() : 0; }

incalg_status incalg_field_parse(const char* spec, incalg_field** out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new incalg_field{incalg::Field::parse(spec)};
    return INCALG_OK;
  });
}

void incalg_field_free(incalg_field* k) { delete k; }

incalg_status incalg_poset_info(const incalg_poset* p, char** json_out) {
  if (!p) return null_arg("poset");
  return guarded([&] {
    emit(json_out, incalg::io::poset_info_json(p->poset));
    return INCALG_OK;
  });
}

incalg_status incalg_hypotheses(const incalg_poset* p, const incalg_field* k, char** json_out) {
  if (!p || !k) return null_arg("poset/field");
  return guarded([&] {
    auto rep = incalg::check_hypotheses(context(p, k));
    json j = incalg::io::hypotheses_json(rep);
    j["field"] = k->field.name();
    emit(json_out, j);
    return rep.holds() ? INCALG_OK : INCALG_E_HYPOTHESIS;
  });
}

incalg_status incalg_classify(const incalg_poset* p, const incalg_field* k, const char* lambda, int general,
                              char** json_out) {
  if (!p || !k) return null_arg("poset/field");
  return guarded([&] {
    auto ctx = context(p, k);
    std::vector<incalg::PosetMap> maps;
    if (lambda) {
      auto m = incalg::io::parse_map(ctx->poset, lambda);
      if (!m.is_involution()) incalg::fail(ErrorKind::InvalidArgument, "lambda is not an involution of the poset");
      maps.push_back(m);
    } else {
      maps = incalg::involutions(ctx->poset);
    }
    json list = json::array();
    for (const auto& m : maps) list.push_back(incalg::io::classification_json(ctx->poset, incalg::classify(ctx, m, general != 0)));
    json j = {{"field", k->field.name()}, {"classifications", list}};
    if (maps.empty()) j["note"] = "X has no involution, so D(X,K) admits none";
    emit(json_out, j);
    return INCALG_OK;
  });
}

incalg_status incalg_equivalent(const incalg_poset* p, const incalg_field* k, const char* inv1, const char* inv2,
                                int general, int* equivalent, char** json_out) {
  if (!p || !k || !inv1 || !inv2) return null_arg("poset/field/involution");
  return guarded([&] {
    auto ctx = context(p, k);
    auto a = incalg::io::spec_from_json(ctx, parse_text(inv1));
    auto b = incalg::io::spec_from_json(ctx, parse_text(inv2));
    auto v = general ? incalg::equivalent(a, b) : incalg::equivalent_inner(a, b);
    if (v.witness && !incalg::verify_witness(*v.witness, a, b))
      incalg::fail(ErrorKind::Internal, "witness failed re-verification");
    if (equivalent) *equivalent = v.equivalent ? 1 : 0;
    emit(json_out, incalg::io::verdict_json(v));
    return INCALG_OK;
  });
}

incalg_status incalg_check_witness(const incalg_poset* p, const incalg_field* k, const char* inv1, const char* inv2,
                                   const char* witness) {
  if (!p || !k || !inv1 || !inv2 || !witness) return null_arg("poset/field/involution/witness");
  return guarded([&] {
    auto ctx = context(p, k);
    auto a = incalg::io::spec_from_json(ctx, parse_text(inv1));
    auto b = incalg::io::spec_from_json(ctx, parse_text(inv2));
    json w = parse_text(witness);
    if (w.contains("witness")) w = w.at("witness");
    if (!w.contains("theta") || !w.contains("alpha")) incalg::fail(ErrorKind::ParseError, "witness needs theta and alpha");
    auto alpha = incalg::io::map_from_json(ctx->poset, w.at("alpha"));
    if (alpha.kind != incalg::MapKind::Automorphism) incalg::fail(ErrorKind::InvalidArgument, "alpha must be an automorphism");
    incalg::DWitness dw{incalg::io::delem_from_json(ctx, w.at("theta")), alpha,
                        w.contains("k") ? incalg::io::parse_scalar(ctx->field, w.at("k")) : ctx->field.one()};
    if (!(dw.k * dw.k).is_one()) incalg::fail(ErrorKind::BadSign, "k must be 1 or -1");
    if (!dw.theta.is_unit()) incalg::fail(ErrorKind::NotAUnit, "theta is not a unit");
    if (w.contains("blocks")) {
      const std::size_t d = ctx->dim();
      const json& bl = w.at("blocks");
      incalg::Matrix m = incalg::d_blocks(incalg::io::matrix_from_json(ctx->field, bl.at("a")),
                                          incalg::io::matrix_from_json(ctx->field, bl.at("b")),
                                          incalg::io::matrix_from_json(ctx->field, bl.at("c")),
                                          incalg::io::matrix_from_json(ctx->field, bl.at("d")));
      if (m.rows() != 2 * d || !(m == dw.matrix())) return INCALG_FALSE;
    }
    return incalg::verify_witness(dw, a, b) ? INCALG_OK : INCALG_FALSE;
  });
}

incalg_status incalg_verify(const incalg_poset* p, const incalg_field* k, unsigned long long seed, char** json_out) {
  if (!p || !k) return null_arg("poset/field");
  return guarded([&] {
    incalg::CheckOptions opts;
    opts.seed = seed;
    auto results = incalg::run_checks(context(p, k), opts);
    json list = json::array();
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      list.push_back({{"name", r.name}, {"passed", r.passed}, {"skipped", r.skipped}, {"detail", r.detail}});
    }
    emit(json_out, json{{"field", k->field.name()}, {"passed", ok}, {"checks", list}});
    return ok ? INCALG_OK : INCALG_FALSE;
  });
}

}  // extern "C"
