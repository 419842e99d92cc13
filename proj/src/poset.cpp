#include "incalg/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace incalg {

namespace {

void check_search_size(std::size_t n) {
  if (n > kMaxSearchElements) {
    fail(ErrorKind::SizeLimit, "symmetry search limited to " + std::to_string(kMaxSearchElements) +
                                   " elements, poset has " + std::to_string(n));
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& relations) {
  std::vector<std::pair<Element, Element>> idx;
  idx.reserve(relations.size());
  auto lookup = [&](const std::string& s) -> Element {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) fail(ErrorKind::UnknownLabel, "relation mentions unknown element '" + s + "'");
    return static_cast<Element>(it - elements.begin());
  };
  for (const auto& [a, b] : relations) idx.emplace_back(lookup(a), lookup(b));
  return from_relations(std::move(elements), idx);
}

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<Element, Element>>& relations) {
  std::unordered_set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) fail(ErrorKind::DuplicateLabel, "duplicate element '" + e + "'");
  }
  Poset p;
  const std::size_t n = elements.size();
  p.labels_ = std::move(elements);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) fail(ErrorKind::UnknownLabel, "relation index out of range");
    if (a == b) fail(ErrorKind::CycleDetected, "relation " + p.labels_[a] + " < " + p.labels_[a]);
    p.leq_[a * n + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        fail(ErrorKind::CycleDetected, "cycle through '" + p.labels_[i] + "' and '" + p.labels_[j] + "'");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (p.less(i, k) && p.less(k, j)) cover = false;
      if (cover) p.covers_.emplace_back(i, j);
    }
  }
  return p;
}

std::optional<Element> Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Element Poset::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorKind::UnknownLabel, "unknown element '" + std::string(label) + "'");
}

std::vector<std::vector<Element>> Poset::components() const {
  UnionFind uf(size());
  for (auto [a, b] : covers_) uf.unite(a, b);
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(size(), SIZE_MAX);
  for (Element x = 0; x < size(); ++x) {
    auto r = uf.find(x);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

bool Poset::is_connected() const { return components().size() <= 1; }

std::vector<Element> Poset::all_comparable_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    bool all = true;
    for (Element y = 0; y < size() && all; ++y) all = comparable(x, y);
    if (all) out.push_back(x);
  }
  return out;
}

Poset Poset::dual() const {
  std::vector<std::pair<Element, Element>> rel;
  for (auto [a, b] : covers_) rel.emplace_back(b, a);
  return from_relations(labels_, rel);
}

bool PosetMap::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

bool PosetMap::is_involution() const {
  if (kind != MapKind::AntiAutomorphism) return false;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[image[i]] != i) return false;
  return true;
}

PosetMap PosetMap::inverse() const {
  PosetMap r{std::vector<Element>(image.size()), kind};
  for (std::size_t i = 0; i < image.size(); ++i) r.image[image[i]] = i;
  return r;
}

PosetMap compose(const PosetMap& a, const PosetMap& b) {
  if (a.size() != b.size()) fail(ErrorKind::ContextMismatch, "composing maps of different sizes");
  PosetMap r;
  r.image.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r.image[i] = a.image[b.image[i]];
  r.kind = (a.kind == b.kind) ? MapKind::Automorphism : MapKind::AntiAutomorphism;
  return r;
}

PosetMap identity_map(const Poset& p) {
  PosetMap r{std::vector<Element>(p.size()), MapKind::Automorphism};
  std::iota(r.image.begin(), r.image.end(), 0);
  return r;
}

bool preserves_order(const Poset& x, const Poset& y, const std::vector<Element>& image, MapKind kind) {
  const std::size_t n = x.size();
  if (image.size() != n || y.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto v : image) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      bool rhs = kind == MapKind::Automorphism ? y.leq(image[a], image[b]) : y.leq(image[b], image[a]);
      if (x.leq(a, b) != rhs) return false;
    }
  return true;
}

PosetMap make_poset_map(const Poset& p, std::vector<Element> image, MapKind kind) {
  if (!preserves_order(p, p, image, kind)) {
    fail(ErrorKind::InvalidArgument,
         kind == MapKind::Automorphism ? "map is not an automorphism" : "map is not an anti-automorphism");
  }
  return PosetMap{std::move(image), kind};
}

std::vector<PosetMap> isomorphisms(const Poset& x, const Poset& y, MapKind kind, std::size_t limit) {
  check_search_size(std::max(x.size(), y.size()));
  std::vector<PosetMap> out;
  const std::size_t n = x.size();
  if (y.size() != n) return out;

  const bool anti = kind == MapKind::AntiAutomorphism;
  auto below = [](const Poset& p, Element e) {
    std::size_t c = 0;
    for (Element z = 0; z < p.size(); ++z) c += p.leq(z, e);
    return c;
  };
  auto above = [](const Poset& p, Element e) {
    std::size_t c = 0;
    for (Element z = 0; z < p.size(); ++z) c += p.leq(e, z);
    return c;
  };
  // Degree signatures prune most of the search tree.
  std::vector<std::pair<std::size_t, std::size_t>> sx(n), sy(n);
  for (Element e = 0; e < n; ++e) {
    sx[e] = {below(x, e), above(x, e)};
    sy[e] = anti ? std::make_pair(above(y, e), below(y, e)) : std::make_pair(below(y, e), above(y, e));
  }

  std::vector<Element> img(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == n) {
      out.push_back(PosetMap{img, kind});
      return limit != 0 && out.size() >= limit;
    }
    for (Element c = 0; c < n; ++c) {
      if (used[c] || sx[a] != sy[c]) continue;
      bool ok = true;
      for (Element b = 0; b < a && ok; ++b) {
        bool ab = anti ? y.leq(img[b], c) : y.leq(c, img[b]);
        bool ba = anti ? y.leq(c, img[b]) : y.leq(img[b], c);
        ok = x.leq(a, b) == ab && x.leq(b, a) == ba;
      }
      if (!ok) continue;
      img[a] = c;
      used[c] = 1;
      if (rec(a + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  rec(0);
  return out;
}

std::vector<PosetMap> automorphisms(const Poset& p) { return isomorphisms(p, p, MapKind::Automorphism); }

std::vector<PosetMap> anti_automorphisms(const Poset& p) {
  return isomorphisms(p, p, MapKind::AntiAutomorphism);
}

std::vector<PosetMap> involutions(const Poset& p) {
  auto all = anti_automorphisms(p);
  std::vector<PosetMap> out;
  for (auto& m : all)
    if (m.is_involution()) out.push_back(std::move(m));
  return out;
}

bool is_lambda_decomposition(const Poset& p, const PosetMap& lambda, const LambdaDecomposition& d) {
  const std::size_t n = p.size();
  if (d.part.size() != n) return false;
  for (Element x = 0; x < n; ++x) {
    bool fixed = lambda(x) == x;
    if (fixed != (d[x] == Part::X3)) return false;
    if (d[x] == Part::X1 && d[lambda(x)] != Part::X2) return false;
    if (d[x] == Part::X2 && d[lambda(x)] != Part::X1) return false;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.leq(y, x)) continue;
      if (d[x] == Part::X1 && d[y] != Part::X1) return false;
      if (d[y] == Part::X2 && d[x] != Part::X2) return false;
    }
  return true;
}

LambdaDecomposition lambda_decomposition(const Poset& p, const PosetMap& lambda) {
  if (!lambda.is_involution() || !preserves_order(p, p, lambda.image, MapKind::AntiAutomorphism))
    fail(ErrorKind::InvalidArgument, "lambda is not an involution of the poset");
  const std::size_t n = p.size();
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x)
    if (lambda(x) > x) reps.push_back(x);

  LambdaDecomposition d;
  d.part.assign(n, Part::X3);
  std::vector<char> assigned(n, 0);
  for (Element x = 0; x < n; ++x) assigned[x] = lambda(x) == x;

  // X1 must be down-closed, so it cannot contain anything above a fixed point
  // or above an element already placed in X2.
  auto consistent = [&](Element in1) {
    Element in2 = lambda(in1);
    for (Element y = 0; y < n; ++y) {
      if (!assigned[y]) continue;
      if (p.leq(y, in1) && d.part[y] != Part::X1) return false;
      if (p.leq(in2, y) && d.part[y] != Part::X2) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == reps.size()) return is_lambda_decomposition(p, lambda, d);
    Element x = reps[k];
    for (Element first : {x, lambda(x)}) {
      Element second = lambda(first);
      d.part[first] = Part::X1;
      d.part[second] = Part::X2;
      assigned[first] = assigned[second] = 1;
      if (consistent(first) && rec(k + 1)) return true;
      assigned[first] = assigned[second] = 0;
      d.part[first] = d.part[second] = Part::X3;
    }
    return false;
  };
  if (!rec(0)) fail(ErrorKind::NoDecomposition, "no lambda-decomposition found");

  for (Element x = 0; x < n; ++x) {
    switch (d.part[x]) {
      case Part::X1: d.x1.push_back(x); break;
      case Part::X2: d.x2.push_back(x); break;
      case Part::X3: d.x3.push_back(x); break;
    }
  }
  return d;
}

std::optional<PosetMap> conjugating_automorphism(const Poset& p, const PosetMap& lambda, const PosetMap& mu) {
  for (const auto& a : automorphisms(p)) {
    if (compose(a, lambda).image == compose(mu, a).image) return a;
  }
  return std::nullopt;
}

}  // namespace incalg
