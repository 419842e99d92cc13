#include "incalg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace incalg::io {

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ',' || c == ':' || c == '<' || c == '"' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::ParseError, std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::pair<Element, Element> parse_pair(const Poset& p, const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) fail(ErrorKind::ParseError, "expected \"x,y\", got \"" + key + "\"");
  return {p.index(trim(key.substr(0, comma))), p.index(trim(key.substr(comma + 1)))};
}

std::string pair_key(const Poset& p, Element x, Element y) { return p.label(x) + "," + p.label(y); }

}  // namespace

Poset parse_poset(std::string_view text) {
  std::string body = trim(text);
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> rel;
  auto add = [&](const std::string& s) {
    if (!valid_label(s)) fail(ErrorKind::ParseError, "invalid label \"" + s + "\"");
    if (std::find(elements.begin(), elements.end(), s) == elements.end()) elements.push_back(s);
  };
  if (!body.empty() && body.front() == '{') {
    json j = parse_json(body);
    const json& el = member(j, "elements");
    if (!el.is_array()) fail(ErrorKind::ParseError, "\"elements\" must be an array");
    for (const auto& e : el) {
      std::string s = e.is_string() ? e.get<std::string>() : e.dump();
      if (!valid_label(s)) fail(ErrorKind::ParseError, "invalid label \"" + s + "\"");
      elements.push_back(s);
    }
    if (j.contains("covers")) {
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) fail(ErrorKind::ParseError, "each cover must be a pair");
        auto label = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        rel.emplace_back(label(c[0]), label(c[1]));
      }
    }
  } else {
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      auto lt = line.find('<');
      if (lt == std::string::npos) {
        add(line);
        continue;
      }
      std::string a = trim(line.substr(0, lt)), b = trim(line.substr(lt + 1));
      add(a);
      add(b);
      rel.emplace_back(a, b);
    }
  }
  if (elements.empty()) fail(ErrorKind::ParseError, "poset has no elements");
  return Poset::from_covers(elements, rel);
}

json poset_json(const Poset& p) {
  json covers = json::array();
  for (auto [x, y] : p.covers()) covers.push_back({p.label(x), p.label(y)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

Scalar parse_scalar(const Field& k, const json& j) {
  if (j.is_string()) return k.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return k.parse_scalar(j.dump());
  fail(ErrorKind::ParseError, "scalar must be a string or an integer");
}

IncFn incfn_from_json(const ContextPtr& ctx, const json& j) {
  const json& entries = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!entries.is_object()) fail(ErrorKind::ParseError, "incidence function must be an object");
  IncFn f(ctx);
  for (const auto& [key, value] : entries.items()) {
    auto [x, y] = parse_pair(ctx->poset, key);
    f.set(x, y, parse_scalar(ctx->field, value));
  }
  return f;
}

json incfn_json(const IncFn& f) {
  const auto& ctx = f.context();
  json entries = json::object();
  for (std::size_t k = 0; k < ctx->dim(); ++k) {
    if (f[k].is_zero()) continue;
    auto [x, y] = ctx->intervals[k];
    entries[pair_key(ctx->poset, x, y)] = f[k].to_string();
  }
  return {{"entries", entries}};
}

json cochain_json(const IncFn& f) {
  const auto& ctx = f.context();
  json out = json::object();
  for (std::size_t k = 0; k < ctx->dim(); ++k) {
    auto [x, y] = ctx->intervals[k];
    out[pair_key(ctx->poset, x, y)] = f[k].to_string();
  }
  return out;
}

DElem delem_from_json(const ContextPtr& ctx, const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "DElem must be an object");
  IncFn f = j.contains("f") ? incfn_from_json(ctx, j.at("f")) : IncFn(ctx);
  IncFn i = j.contains("i") ? incfn_from_json(ctx, j.at("i")) : IncFn(ctx);
  return {f, i};
}

json delem_json(const DElem& a) { return {{"f", incfn_json(a.f)}, {"i", incfn_json(a.i)}}; }

PosetMap map_from_json(const Poset& p, const json& j) {
  if (j.is_string()) return parse_map(p, j.get<std::string>());
  if (!j.is_object()) fail(ErrorKind::ParseError, "map must be an object {\"x\": \"y\"}");
  const std::size_t n = p.size();
  std::vector<Element> image(n, n);
  for (const auto& [key, value] : j.items()) image[p.index(key)] = p.index(as_string(value, "map value"));
  for (Element x = 0; x < n; ++x)
    if (image[x] == n) image[x] = x;
  for (MapKind kind : {MapKind::AntiAutomorphism, MapKind::Automorphism})
    if (preserves_order(p, p, image, kind)) return make_poset_map(p, image, kind);
  fail(ErrorKind::InvalidArgument, "map neither preserves nor reverses the order");
}

PosetMap parse_map(const Poset& p, std::string_view text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return map_from_json(p, parse_json(t));
  json j = json::object();
  std::istringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorKind::ParseError, "expected x:y, got \"" + item + "\"");
    j[trim(item.substr(0, colon))] = trim(item.substr(colon + 1));
  }
  return map_from_json(p, j);
}

json map_json(const Poset& p, const PosetMap& m) {
  json out = json::object();
  for (Element x = 0; x < m.size(); ++x) out[p.label(x)] = p.label(m(x));
  return out;
}

Matrix matrix_from_json(const Field& k, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) fail(ErrorKind::ParseError, "matrix must be a list of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  Matrix m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(ErrorKind::ParseError, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(k, j[r][c]);
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

InvolutionSpec spec_from_json(const ContextPtr& ctx, const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "involution must be an object");
  const std::size_t d = ctx->dim();
  if (j.contains("matrix")) {
    Matrix m = matrix_from_json(ctx->field, j.at("matrix"));
    if (m.rows() != 2 * d || m.cols() != 2 * d)
      fail(ErrorKind::ParseError, "raw map must be " + std::to_string(2 * d) + " x " + std::to_string(2 * d));
    return recognize(ctx, m);
  }
  if (j.contains("blocks")) {
    const json& b = j.at("blocks");
    Matrix blk[4] = {matrix_from_json(ctx->field, member(b, "a")), matrix_from_json(ctx->field, member(b, "b")),
                     matrix_from_json(ctx->field, member(b, "c")), matrix_from_json(ctx->field, member(b, "d"))};
    for (const auto& m : blk)
      if (m.rows() != d || m.cols() != d)
        fail(ErrorKind::ParseError, "each block must be " + std::to_string(d) + " x " + std::to_string(d));
    return recognize(ctx, d_blocks(blk[0], blk[1], blk[2], blk[3]));
  }
  DElem theta = j.contains("theta") ? delem_from_json(ctx, j.at("theta")) : DElem::one(ctx);
  PosetMap lambda = map_from_json(ctx->poset, member(j, "lambda"));
  Scalar k = j.contains("k") ? parse_scalar(ctx->field, j.at("k")) : ctx->field.one();
  return build(theta, lambda, k);
}

json spec_json(const InvolutionSpec& s) {
  const Poset& p = s.context()->poset;
  return {{"theta", delem_json(s.theta())}, {"lambda", map_json(p, s.lambda())}, {"k", s.sign()}};
}

json morphism_json(const FiaMorphism& m) {
  const Poset& p = m.u.poset();
  return {{"u", incfn_json(m.u)}, {"sigma", cochain_json(m.sigma)}, {"map", map_json(p, m.map)}, {"anti", m.anti}};
}

json witness_json(const DWitness& w) {
  const auto& ctx = w.theta.context();
  const std::size_t d = ctx->dim();
  Matrix m = w.matrix();
  return {{"theta", delem_json(w.theta)},
          {"alpha", map_json(ctx->poset, w.alpha)},
          {"k", w.k.is_one() ? 1 : -1},
          {"blocks",
           {{"a", matrix_json(m.block(0, 0, d, d))},
            {"b", matrix_json(m.block(0, d, d, d))},
            {"c", matrix_json(m.block(d, 0, d, d))},
            {"d", matrix_json(m.block(d, d, d, d))}}}};
}

json verdict_json(const Verdict& v) {
  json out = {{"equivalent", v.equivalent}};
  if (v.witness) out["witness"] = witness_json(*v.witness);
  if (!v.distinguisher.empty()) out["distinguisher"] = v.distinguisher;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

json hypotheses_json(const HypothesisReport& r) {
  json factors = json::array();
  for (const auto& f : r.mult.invariant_factors) factors.push_back(f.get_str());
  json mult = {{"holds", r.mult.holds}, {"invariant_factors", factors}};
  if (r.mult.counterexample) mult["counterexample"] = cochain_json(*r.mult.counterexample);
  json der = {{"holds", r.der.holds}, {"rank", r.der.rank}, {"unknowns", r.der.unknowns}};
  if (r.der.counterexample) der["counterexample"] = cochain_json(*r.der.counterexample);
  return {{"mult_subset_inn", mult}, {"der_equals_ider", der}};
}

json classification_json(const Poset& p, const Classification& c) {
  json reps = json::array();
  for (const auto& r : c.representatives) {
    auto inv = invariant(r);
    json chi = json::array();
    for (const auto& s : inv.chi) chi.push_back(s.to_string());
    json entry = spec_json(r);
    entry["sign"] = inv.sign;
    entry["chi"] = chi;
    if (!inv.type.empty()) entry["type"] = inv.type;
    reps.push_back(entry);
  }
  json out = {{"lambda", map_json(p, c.lambda)}, {"general", c.general}, {"representatives", reps}};
  out["count"] = c.count ? json(*c.count) : json(nullptr);
  if (!c.schema.empty()) out["schema"] = c.schema;
  return out;
}

json poset_info_json(const Poset& p) {
  json comparable = json::array();
  for (Element x : p.all_comparable_elements()) comparable.push_back(p.label(x));
  json antis = json::array(), invs = json::array();
  for (const auto& a : anti_automorphisms(p)) antis.push_back(map_json(p, a));
  for (const auto& a : involutions(p)) {
    auto dec = lambda_decomposition(p, a);
    json parts = json::object();
    auto labels = [&](const std::vector<Element>& v) {
      json out = json::array();
      for (Element x : v) out.push_back(p.label(x));
      return out;
    };
    invs.push_back({{"map", map_json(p, a)}, {"X1", labels(dec.x1)}, {"X2", labels(dec.x2)}, {"X3", labels(dec.x3)}});
  }
  return {{"elements", p.labels()},
          {"connected", p.is_connected()},
          {"all_comparable", comparable},
          {"automorphisms", automorphisms(p).size()},
          {"anti_automorphisms", antis},
          {"involutions", invs}};
}

}  // namespace incalg::io
