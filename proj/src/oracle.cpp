#include "incalg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "incalg/error.hpp"

namespace incalg::oracle {

namespace {

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

void check_limit(std::uint64_t n, std::uint64_t limit, const char* what) {
  if (n > limit)
    fail(ErrorKind::SizeLimit, std::string(what) + " has " + (n == UINT64_MAX ? std::string("too many") : std::to_string(n)) +
                                   " elements, over the limit " + std::to_string(limit));
}

bool is_prime_small(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SmallRing::SmallRing(const Poset& poset, std::uint32_t p, Ring ring) : poset_(poset), p_(p), ring_(ring) {
  if (!is_prime_small(p) || p > 65521) fail(ErrorKind::InvalidArgument, "oracle needs a prime p <= 65521");
  const std::size_t n = poset.size();
  index_.assign(n * n, SIZE_MAX);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (poset.leq(x, y)) {
        index_[x * n + y] = pairs_.size();
        pairs_.push_back({x, y});
      }
  for (auto [x, y] : pairs_)
    for (Element z = 0; z < n; ++z)
      if (poset.leq(x, z) && poset.leq(z, y)) terms_.push_back({pair_index(x, y), pair_index(x, z), pair_index(z, y)});
}

std::size_t SmallRing::pair_index(Element x, Element y) const { return index_[x * poset_.size() + y]; }

std::uint32_t SmallRing::inv(std::uint32_t a) const {
  std::uint64_t r = 1, b = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1, b = b * b % p_)
    if (e & 1) r = r * b % p_;
  return static_cast<std::uint32_t>(r);
}

Elem SmallRing::one() const {
  Elem e = zero();
  for (Element x = 0; x < poset_.size(); ++x) e[pair_index(x, x)] = 1;
  return e;
}

Elem SmallRing::basis(std::size_t k) const {
  Elem e = zero();
  e.at(k) = 1;
  return e;
}

Elem SmallRing::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = (a[k] + b[k]) % p_;
  return r;
}

Elem SmallRing::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] ? p_ - a[k] : 0;
  return r;
}

Elem SmallRing::scale(const Elem& a, std::uint32_t s) const {
  Elem r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = static_cast<std::uint32_t>(std::uint64_t(a[k]) * s % p_);
  return r;
}

Elem SmallRing::fi_mul(const std::uint32_t* a, const std::uint32_t* b) const {
  std::vector<std::uint64_t> acc(fi_dim(), 0);
  for (const auto& t : terms_) acc[t[0]] += std::uint64_t(a[t[1]]) * b[t[2]] % p_;
  Elem r(fi_dim());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<std::uint32_t>(acc[k] % p_);
  return r;
}

Elem SmallRing::mul(const Elem& a, const Elem& b) const {
  const std::size_t d = fi_dim();
  Elem f = fi_mul(a.data(), b.data());
  if (ring_ == Ring::FI) return f;
  Elem x = fi_mul(a.data(), b.data() + d), y = fi_mul(a.data() + d, b.data());
  f.resize(2 * d);
  for (std::size_t k = 0; k < d; ++k) f[d + k] = (x[k] + y[k]) % p_;
  return f;
}

bool SmallRing::is_unit(const Elem& a) const {
  for (Element x = 0; x < poset_.size(); ++x)
    if (a[pair_index(x, x)] == 0) return false;
  return true;
}

Elem SmallRing::inverse(const Elem& a) const {
  if (!is_unit(a)) fail(ErrorKind::NotAUnit, "oracle: element is not a unit");
  const std::size_t n = poset_.size(), d = fi_dim();
  // Right inverse of the f-part: solve g(x,y) from the top of each interval down.
  Elem g(d, 0);
  std::vector<std::pair<Element, Element>> order = pairs_;
  std::sort(order.begin(), order.end(), [&](auto l, auto r) {
    auto len = [&](std::pair<Element, Element> q) {
      std::size_t c = 0;
      for (Element z = 0; z < n; ++z) c += poset_.leq(q.first, z) && poset_.leq(z, q.second);
      return c;
    };
    return len(l) < len(r);
  });
  for (auto [x, y] : order) {
    std::uint64_t s = 0;
    for (Element z = 0; z < n; ++z)
      if (z != x && poset_.leq(x, z) && poset_.leq(z, y)) s += std::uint64_t(a[pair_index(x, z)]) * g[pair_index(z, y)] % p_;
    std::uint64_t target = (x == y ? 1 : 0) + p_ - s % p_;
    g[pair_index(x, y)] = static_cast<std::uint32_t>(target % p_ * inv(a[pair_index(x, x)]) % p_);
  }
  if (ring_ == Ring::FI) return g;
  Elem i(a.begin() + d, a.end());
  Elem t = fi_mul(fi_mul(g.data(), i.data()).data(), g.data());
  g.resize(2 * d);
  for (std::size_t k = 0; k < d; ++k) g[d + k] = t[k] ? p_ - t[k] : 0;
  return g;
}

std::uint64_t SmallRing::size() const { return sat_pow(p_, dim()); }

std::uint64_t SmallRing::unit_count() const {
  const std::size_t n = poset_.size();
  std::uint64_t u = sat_pow(p_ - 1, n), rest = sat_pow(p_, dim() - n);
  if (u == UINT64_MAX || rest == UINT64_MAX || (rest && u > UINT64_MAX / rest)) return UINT64_MAX;
  return u * rest;
}

void SmallRing::for_each(const std::function<void(const Elem&)>& fn, bool units_only, std::uint64_t limit) const {
  check_limit(units_only ? unit_count() : size(), limit, units_only ? "unit group" : "ring");
  std::vector<char> diag(dim(), 0);
  for (Element x = 0; x < poset_.size(); ++x) diag[pair_index(x, x)] = units_only;
  Elem e(dim(), 0);
  for (std::size_t k = 0; k < dim(); ++k)
    if (diag[k]) e[k] = 1;
  while (true) {
    fn(e);
    std::size_t k = 0;
    for (; k < dim(); ++k) {
      if (++e[k] < p_) break;
      e[k] = diag[k] ? 1 : 0;
    }
    if (k == dim()) return;
  }
}

RawMap SmallRing::map_matrix(const std::function<Elem(const Elem&)>& fn) const {
  const std::size_t n = dim();
  RawMap m(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem img = fn(basis(j));
    std::copy(img.begin(), img.end(), m.begin() + j * n);
  }
  return m;
}

Elem SmallRing::apply(const RawMap& m, const Elem& a) const {
  const std::size_t n = dim();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (a[j])
      for (std::size_t r = 0; r < n; ++r) acc[r] += std::uint64_t(m[j * n + r]) * a[j] % p_;
  Elem out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = static_cast<std::uint32_t>(acc[r] % p_);
  return out;
}

RawMap SmallRing::compose(const RawMap& a, const RawMap& b) const {
  const std::size_t n = dim();
  RawMap out(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem col(b.begin() + j * n, b.begin() + (j + 1) * n);
    Elem img = apply(a, col);
    std::copy(img.begin(), img.end(), out.begin() + j * n);
  }
  return out;
}

RawMap SmallRing::identity_map() const {
  const std::size_t n = dim();
  RawMap m(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) m[j * n + j] = 1;
  return m;
}

Conjugator inner_conjugator(const SmallRing& r, const Elem& unit) {
  Elem inv = r.inverse(unit);
  return {r.map_matrix([&](const Elem& a) { return r.mul(r.mul(unit, a), inv); }),
          r.map_matrix([&](const Elem& a) { return r.mul(r.mul(inv, a), unit); })};
}

RawMap from_matrix(const Matrix& m) {
  RawMap out(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j * m.rows() + i] = m(i, j).as_residue();
  return out;
}

std::vector<Elem> enumerate_units(const Poset& p, std::uint32_t prime, Ring ring, std::uint64_t limit) {
  SmallRing r(p, prime, ring);
  std::vector<Elem> out;
  r.for_each([&](const Elem& e) { out.push_back(e); }, true, limit);
  return out;
}

namespace {

bool reverses(const Poset& x, const Poset& y, const std::vector<Element>& s) {
  for (Element a = 0; a < x.size(); ++a)
    for (Element b = 0; b < x.size(); ++b)
      if (x.leq(a, b) != y.leq(s[b], s[a])) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Element>> brute_involutions(const Poset& p) {
  if (p.size() > 9) fail(ErrorKind::SizeLimit, "permutation search is limited to 9 elements");
  std::vector<Element> s(p.size());
  std::iota(s.begin(), s.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    bool inv = true;
    for (Element a = 0; a < s.size(); ++a) inv = inv && s[s[a]] == a;
    if (inv && reverses(p, p, s)) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

bool brute_anti_isomorphic(const Poset& x, const Poset& y) {
  if (x.size() != y.size()) return false;
  if (x.size() > 9) fail(ErrorKind::SizeLimit, "permutation search is limited to 9 elements");
  std::vector<Element> s(x.size());
  std::iota(s.begin(), s.end(), 0);
  do {
    if (reverses(x, y, s)) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

Elem phi0(const SmallRing& r, const std::vector<Element>& lambda, std::uint32_t k, const Elem& a) {
  const std::size_t d = r.fi_dim();
  Elem out(r.dim(), 0);
  for (std::size_t t = 0; t < d; ++t) {
    auto [x, y] = r.pairs()[t];
    std::size_t s = r.pair_index(lambda[y], lambda[x]);
    out[s] = a[t];
    out[d + s] = static_cast<std::uint32_t>(std::uint64_t(a[d + t]) * k % r.prime());
  }
  return out;
}

std::vector<RawMap> enumerate_involutions_D(const Poset& p, std::uint32_t prime, std::uint64_t limit) {
  SmallRing r(p, prime, Ring::D);
  check_limit(r.unit_count(), limit, "unit group");
  std::set<RawMap> maps, tried;
  const RawMap id = r.identity_map();
  for (const auto& lam : brute_involutions(p)) {
    for (std::uint32_t k : {1u, prime - 1}) {
      r.for_each(
          [&](const Elem& theta) {
            Elem inv = r.inverse(theta);
            RawMap m = r.map_matrix([&](const Elem& a) { return r.mul(r.mul(theta, phi0(r, lam, k, a)), inv); });
            if (tried.insert(m).second && r.compose(m, m) == id) maps.insert(m);
          },
          true, limit);
    }
  }
  return {maps.begin(), maps.end()};
}

namespace {

struct RawSearch {
  const SmallRing& r;
  std::vector<Elem> gens;   // generators of D as an algebra
  std::vector<Elem> image;  // their images
  std::vector<Elem> candidates;
  std::set<RawMap> found;

  // Products of two generators that are zero or again a generator.
  struct Relation {
    std::size_t a, b;
    long target;  // -1 for zero
  };
  std::vector<std::vector<Relation>> relations_at;  // indexed by max(a, b)

  explicit RawSearch(const SmallRing& ring) : r(ring) {
    const Poset& p = r.poset();
    const std::size_t d = r.fi_dim();
    for (Element x = 0; x < p.size(); ++x) gens.push_back(r.basis(r.pair_index(x, x)));
    for (auto [x, y] : p.covers()) gens.push_back(r.basis(r.pair_index(x, y)));
    Elem z = r.zero();
    for (Element x = 0; x < p.size(); ++x) z[d + r.pair_index(x, x)] = 1;
    gens.push_back(z);

    relations_at.resize(gens.size());
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b) {
        Elem prod = r.mul(gens[a], gens[b]);
        long target = -2;
        if (prod == r.zero()) target = -1;
        for (std::size_t g = 0; g < gens.size(); ++g)
          if (prod == gens[g]) target = static_cast<long>(g);
        if (target == -2 || (target >= 0 && static_cast<std::size_t>(target) > std::max(a, b))) continue;
        relations_at[std::max(a, b)].push_back({a, b, target});
      }
    r.for_each([&](const Elem& e) { candidates.push_back(e); }, false, UINT64_MAX);
  }

  bool consistent(std::size_t level) const {
    for (const auto& rel : relations_at[level]) {
      Elem want = rel.target < 0 ? r.zero() : image[rel.target];
      if (r.mul(image[rel.b], image[rel.a]) != want) return false;
    }
    return true;
  }

  // φ on a full basis from the generator images.
  RawMap extend() const {
    const Poset& p = r.poset();
    const std::size_t d = r.fi_dim(), n = p.size();
    std::vector<Elem> img(2 * d);
    for (Element x = 0; x < n; ++x) img[r.pair_index(x, x)] = image[x];
    std::map<std::pair<Element, Element>, std::size_t> cover_gen;
    for (std::size_t c = 0; c < p.covers().size(); ++c) cover_gen[p.covers()[c]] = n + c;
    // e_xy = e_xz e_zy along a cover x < z, so φ(e_xy) = φ(e_zy) φ(e_xz).
    std::vector<std::pair<Element, Element>> order = r.pairs();
    std::vector<std::size_t> height(d, 0);
    for (std::size_t t = 0; t < d; ++t)
      for (Element z = 0; z < n; ++z) height[t] += p.leq(order[t].first, z) && p.leq(z, order[t].second);
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });
    for (std::size_t t : idx) {
      auto [x, y] = order[t];
      if (x == y) continue;
      for (auto [c, g] : cover_gen) {
        if (c.first != x || !p.leq(c.second, y)) continue;
        img[t] = c.second == y ? image[g] : r.mul(img[r.pair_index(c.second, y)], image[g]);
        break;
      }
    }
    for (std::size_t t = 0; t < d; ++t) img[d + t] = r.mul(image.back(), img[t]);
    RawMap m;
    for (const auto& col : img) m.insert(m.end(), col.begin(), col.end());
    return m;
  }

  bool valid(const RawMap& m) const {
    const std::size_t n = r.dim();
    if (r.compose(m, m) != r.identity_map()) return false;
    std::vector<Elem> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = Elem(m.begin() + j * n, m.begin() + (j + 1) * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r.apply(m, r.mul(r.basis(a), r.basis(b))) != r.mul(img[b], img[a])) return false;
    return true;
  }

  void run(std::size_t level) {
    if (level == gens.size()) {
      RawMap m = extend();
      if (valid(m)) found.insert(m);
      return;
    }
    for (const auto& c : candidates) {
      image[level] = c;
      if (consistent(level)) run(level + 1);
    }
  }
};

}  // namespace

std::vector<RawMap> raw_involutions_D(const Poset& p, std::uint32_t prime, std::uint64_t limit) {
  SmallRing r(p, prime, Ring::D);
  check_limit(r.size(), limit, "ring");
  RawSearch s(r);
  s.image.assign(s.gens.size(), r.zero());
  s.run(0);
  return {s.found.begin(), s.found.end()};
}

std::vector<Elem> commutant(const Poset& p, std::uint32_t prime, Ring ring, std::uint64_t limit) {
  SmallRing r(p, prime, ring);
  std::vector<Elem> out;
  r.for_each(
      [&](const Elem& z) {
        for (std::size_t k = 0; k < r.dim(); ++k) {
          Elem b = r.basis(k);
          if (r.mul(z, b) != r.mul(b, z)) return;
        }
        out.push_back(z);
      },
      false, limit);
  return out;
}

Partition orbit_partition(const SmallRing& r, const std::vector<RawMap>& items, const std::vector<Conjugator>& conjugators) {
  std::map<RawMap, std::size_t> where;
  for (std::size_t i = 0; i < items.size(); ++i) where.emplace(items[i], i);
  UnionFind uf(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    for (const auto& c : conjugators) {
      auto it = where.find(r.compose(r.compose(c.g, items[i]), c.g_inv));
      if (it != where.end()) uf.unite(i, it->second);
    }
  Partition out;
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, fresh] = ids.emplace(uf.find(i), ids.size());
    out.block.push_back(it->second);
  }
  out.count = ids.size();
  return out;
}

std::vector<Elem> unit_generators(const SmallRing& r) {
  const Poset& p = r.poset();
  std::uint32_t g = 1;
  for (std::uint32_t c = 2; c < r.prime() && g == 1; ++c) {
    std::uint64_t x = c;
    std::uint32_t order = 1;
    while (x != 1) x = x * c % r.prime(), ++order;
    if (order == r.prime() - 1) g = c;
  }
  std::vector<Elem> out;
  for (Element x = 0; x < p.size(); ++x) {
    Elem e = r.one();
    e[r.pair_index(x, x)] = g;
    if (g != 1) out.push_back(e);
  }
  for (std::size_t t = 0; t < r.fi_dim(); ++t) {
    auto [x, y] = r.pairs()[t];
    if (x != y) out.push_back(r.add(r.one(), r.basis(t)));
    if (r.ring() == Ring::D) out.push_back(r.add(r.one(), r.basis(r.fi_dim() + t)));
  }
  return out;
}

std::uint64_t generated_group_order(const SmallRing& r, const std::vector<Elem>& gens, std::uint64_t limit) {
  std::set<Elem> seen{r.one()};
  std::deque<Elem> queue{r.one()};
  while (!queue.empty()) {
    Elem e = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Elem n = r.mul(e, g);
      if (seen.insert(n).second) {
        check_limit(seen.size(), limit, "generated group");
        queue.push_back(n);
      }
    }
  }
  return seen.size();
}

std::uint64_t count_antisymmetric_units(const Poset& p, std::uint32_t prime, const std::vector<Element>& lambda, int k,
                                        std::uint64_t limit) {
  SmallRing r(p, prime, Ring::D);
  std::uint32_t kk = k == 1 ? 1 : prime - 1;
  std::uint64_t count = 0;
  r.for_each([&](const Elem& t) { count += phi0(r, lambda, kk, t) == r.neg(t); }, true, limit);
  return count;
}

}  // namespace incalg::oracle
