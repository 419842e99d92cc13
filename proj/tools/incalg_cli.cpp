// Command-line front end over the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "incalg/incalg.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Failure {
  int code;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{INCALG_E_INPUT};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A file path, or the value itself when no such file exists.
std::string file_or_inline(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  return slurp(arg);
}

// Statuses other than OK abort, except the negative verdicts a command
// reports itself.
int check(incalg_status st, bool negative_ok = false) {
  bool negative = st == INCALG_FALSE || st == INCALG_E_HYPOTHESIS;
  if (st != INCALG_OK && !(negative_ok && negative)) {
    std::cerr << "error: " << incalg_last_error() << "\n";
    throw Failure{st};
  }
  return st;
}

struct PosetHandle {
  incalg_poset* p = nullptr;
  ~PosetHandle() { incalg_poset_free(p); }
};
struct FieldHandle {
  incalg_field* k = nullptr;
  ~FieldHandle() { incalg_field_free(k); }
};

json take(char* s) {
  std::unique_ptr<char, decltype(&incalg_free_string)> guard(s, incalg_free_string);
  return s ? json::parse(s) : json();
}

std::string join(const json& arr, const char* empty = "none") {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : ",") + v.get<std::string>();
  return out.empty() ? empty : out;
}

std::string map_text(const json& m) {
  std::string out;
  for (const auto& [k, v] : m.items())
    if (k != v.get<std::string>()) out += (out.empty() ? "" : " ") + k + "->" + v.get<std::string>();
  return out.empty() ? "id" : out;
}

void print_poset_info(const json& j) {
  std::cout << "elements: " << join(j["elements"]) << "\n";
  std::cout << "connected: " << (j["connected"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "all-comparable: " << join(j["all_comparable"]) << "\n";
  std::cout << "|Aut|: " << j["automorphisms"].get<std::size_t>() << "\n";
  if (j["anti_automorphisms"].empty()) {
    std::cout << "anti-automorphisms: none, so D(X,K) admits no involution\n";
    return;
  }
  std::cout << "anti-automorphisms: " << j["anti_automorphisms"].size() << "\n";
  std::cout << "involutions: " << j["involutions"].size() << "\n";
  for (const auto& inv : j["involutions"])
    std::cout << "  " << map_text(inv["map"]) << "  X1 = {" << join(inv["X1"], "") << "}  X2 = {" << join(inv["X2"], "")
              << "}  X3 = {" << join(inv["X3"], "") << "}\n";
}

void print_hypotheses(const json& j) {
  const auto& m = j["mult_subset_inn"];
  const auto& d = j["der_equals_ider"];
  std::cout << "field: " << j["field"].get<std::string>() << "\n";
  std::cout << "Mult ⊆ Inn: " << (m["holds"].get<bool>() ? "true" : "false");
  std::string factors;
  for (const auto& f : m["invariant_factors"]) factors += (factors.empty() ? "" : ",") + f.get<std::string>();
  std::cout << "  (invariant factors: " << (factors.empty() ? "none" : factors) << ")\n";
  if (m.contains("counterexample")) std::cout << "  non-inner cocycle sigma = " << m["counterexample"].dump() << "\n";
  std::cout << "Der = IDer: " << (d["holds"].get<bool>() ? "true" : "false") << "  (rank " << d["rank"].get<int>()
            << " of " << d["unknowns"].get<int>() << ")\n";
  if (d.contains("counterexample")) std::cout << "  non-inner cocycle tau = " << d["counterexample"].dump() << "\n";
}

void print_checks(const json& j) {
  for (const auto& c : j["checks"]) {
    const char* tag = c["skipped"].get<bool>() ? "SKIP" : c["passed"].get<bool>() ? "PASS" : "FAIL";
    std::cout << tag << "  " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence algebras, their idealizations and involutions"};
  app.require_subcommand(1);
  std::string poset_file, field_spec = "Q", lambda;
  bool as_json = false, general = false, inner = false, verify_witness = false;
  unsigned long long seed = 1;

  auto add_poset = [&](CLI::App* c) {
    c->add_option("--poset,poset", poset_file, "poset file (JSON or a<b lines)")->required();
  };
  auto add_field = [&](CLI::App* c) { c->add_option("--field", field_spec, "Q or F<p>")->capture_default_str(); };

  auto* info = app.add_subcommand("poset-info", "connectivity, symmetries and involutions of a poset");
  add_poset(info);
  info->add_flag("--json", as_json, "print JSON");

  auto* hyp = app.add_subcommand("hypotheses", "check Mult ⊆ Inn and Der = IDer");
  add_poset(hyp);
  add_field(hyp);
  hyp->add_flag("--json", as_json, "print JSON");

  auto* cls = app.add_subcommand("classify", "classify involutions of D(X,K)");
  add_poset(cls);
  add_field(cls);
  cls->add_option("--lambda", lambda, "involution of X (file, JSON or x:y,...); default all");
  cls->add_flag("--general", general, "fold classes by Aut(X)");
  cls->add_flag("--inner", inner, "inner classes (default)");
  cls->add_flag("--json", as_json, "print JSON (default)");

  std::string inv1, inv2;
  auto* eq = app.add_subcommand("equivalent", "decide equivalence of two involutions");
  add_poset(eq);
  add_field(eq);
  eq->add_option("inv1", inv1, "first involution (file or JSON)")->required();
  eq->add_option("inv2", inv2, "second involution (file or JSON)")->required();
  auto* g_flag = eq->add_flag("--general", general, "allow every automorphism of D(X,K)");
  eq->add_flag("--inner", inner, "inner automorphisms only (default)")->excludes(g_flag);
  eq->add_flag("--check", verify_witness, "re-verify the witness before exiting");
  eq->add_flag("--json", as_json, "print JSON (default)");

  auto* ver = app.add_subcommand("verify", "run the property checks on D(X,K)");
  add_poset(ver);
  add_field(ver);
  ver->add_option("--seed", seed, "random seed")->capture_default_str();
  ver->add_flag("--json", as_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : INCALG_E_INPUT;
  }

  try {
    PosetHandle p;
    FieldHandle k;
    check(incalg_poset_parse(slurp(poset_file).c_str(), &p.p));
    check(incalg_field_parse(field_spec.c_str(), &k.k));
    char* out = nullptr;

    if (*info) {
      check(incalg_poset_info(p.p, &out));
      json j = take(out);
      if (as_json) std::cout << j.dump(2) << "\n";
      else print_poset_info(j);
      return 0;
    }
    if (*hyp) {
      int st = check(incalg_hypotheses(p.p, k.k, &out), true);
      json j = take(out);
      if (as_json) std::cout << j.dump(2) << "\n";
      else print_hypotheses(j);
      return st;
    }
    if (*cls) {
      std::string lam = lambda.empty() ? "" : file_or_inline(lambda);
      check(incalg_classify(p.p, k.k, lambda.empty() ? nullptr : lam.c_str(), general, &out));
      std::cout << take(out).dump(2) << "\n";
      return 0;
    }
    if (*eq) {
      std::string a = file_or_inline(inv1), b = file_or_inline(inv2);
      int equivalent = 0;
      check(incalg_equivalent(p.p, k.k, a.c_str(), b.c_str(), general, &equivalent, &out));
      json j = take(out);
      std::cout << j.dump(2) << "\n";
      if (verify_witness && equivalent) {
        int st = check(incalg_check_witness(p.p, k.k, a.c_str(), b.c_str(), j.dump().c_str()), true);
        if (st != INCALG_OK) {
          std::cerr << "error: witness failed re-verification\n";
          return INCALG_E_INTERNAL;
        }
        std::cerr << "witness verified\n";
      }
      return equivalent ? 0 : 1;
    }
    if (*ver) {
      int st = check(incalg_verify(p.p, k.k, seed, &out), true);
      json j = take(out);
      if (as_json) std::cout << j.dump(2) << "\n";
      else print_checks(j);
      return st;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
