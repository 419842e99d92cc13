#include "incalg/morphisms.hpp"

#include "cochain.hpp"

namespace incalg {

LinearEndo endo_matrix(const ContextPtr& ctx, const std::function<IncFn(const IncFn&)>& map) {
  std::vector<Vector> cols;
  cols.reserve(ctx->dim());
  for (std::size_t k = 0; k < ctx->dim(); ++k) {
    auto [x, y] = ctx->intervals[k];
    cols.push_back(map(IncFn::e(ctx, x, y)).values());
  }
  return Matrix::from_columns(ctx->field, ctx->dim(), cols);
}

IncFn apply_endo(const ContextPtr& ctx, const LinearEndo& m, const IncFn& f) {
  check_same_context(ctx, f.context());
  return IncFn(ctx, m.apply(f.values()));
}

IncFn apply_poset_map(const PosetMap& m, const IncFn& f) {
  const auto& ctx = f.context();
  if (m.size() != ctx->poset.size()) fail(ErrorKind::ContextMismatch, "poset map has wrong size");
  IncFn out(ctx);
  for (std::size_t k = 0; k < ctx->dim(); ++k) {
    auto [x, y] = ctx->intervals[k];
    if (m.kind == MapKind::Automorphism)
      out.set(m(x), m(y), f[k]);
    else
      out.set(m(y), m(x), f[k]);
  }
  return out;
}

IncFn conjugate(const IncFn& u, const IncFn& f) { return u * f * u.inverse(); }

IncFn FiaMorphism::operator()(const IncFn& f) const {
  IncFn g = apply_poset_map(map, f).hadamard(sigma);
  return conjugate(u, g);
}

LinearEndo FiaMorphism::matrix() const {
  IncFn uinv = u.inverse();
  return endo_matrix(u.context(), [&](const IncFn& f) { return u * apply_poset_map(map, f).hadamard(sigma) * uinv; });
}

FiaMorphism identity_morphism(const ContextPtr& ctx) {
  IncFn ones(ctx, Vector(ctx->dim(), ctx->field.one()));
  return FiaMorphism{IncFn::delta(ctx), std::move(ones), identity_map(ctx->poset), false};
}

FiaMorphism inner_morphism(const IncFn& u) {
  if (!u.is_unit()) u.inverse();  // raises NotAUnit with the offending entry
  FiaMorphism m = identity_morphism(u.context());
  m.u = u;
  return m;
}

FiaMorphism multiplicative_morphism(const IncFn& sigma) {
  if (!is_multiplicative_cocycle(sigma)) fail(ErrorKind::InvalidCocycle, "sigma is not a multiplicative cocycle");
  FiaMorphism m = identity_morphism(sigma.context());
  m.sigma = sigma;
  return m;
}

FiaMorphism induced_morphism(const ContextPtr& ctx, const PosetMap& map) {
  auto kind = map.kind;
  if (!preserves_order(ctx->poset, ctx->poset, map.image, kind))
    fail(ErrorKind::InvalidArgument, "map does not respect the order");
  FiaMorphism m = identity_morphism(ctx);
  m.map = map;
  m.anti = kind == MapKind::AntiAutomorphism;
  return m;
}

FiaMorphism compose(const FiaMorphism& a, const FiaMorphism& b) {
  const auto& ctx = a.u.context();
  check_same_context(ctx, b.u.context());
  return decompose(ctx, a.matrix() * b.matrix(), a.anti != b.anti);
}

bool is_multiplicative_cocycle(const IncFn& sigma) {
  const auto& ctx = sigma.context();
  const Poset& p = ctx->poset;
  for (std::size_t k = 0; k < ctx->dim(); ++k) {
    auto [x, y] = ctx->intervals[k];
    if (x == y ? !sigma[k].is_one() : sigma[k].is_zero()) return false;
  }
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      for (Element z = 0; z < p.size(); ++z)
        if (p.less(y, z) && sigma.at(x, y) * sigma.at(y, z) != sigma.at(x, z)) return false;
    }
  return true;
}

FiaMorphism decompose(const ContextPtr& ctx, const LinearEndo& raw, bool anti) {
  const std::size_t d = ctx->dim();
  const Poset& p = ctx->poset;
  if (raw.rows() != d || raw.cols() != d || !(raw.field() == ctx->field))
    fail(ErrorKind::ContextMismatch, "raw map has the wrong shape");

  if (apply_endo(ctx, raw, IncFn::delta(ctx)) != IncFn::delta(ctx)) fail(ErrorKind::NotUnital, "raw(delta) != delta");
  std::vector<IncFn> images;
  std::vector<IncFn> basis;
  for (std::size_t k = 0; k < d; ++k) {
    basis.push_back(IncFn::e(ctx, ctx->intervals[k].first, ctx->intervals[k].second));
    images.emplace_back(ctx, raw.column(k));
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      IncFn lhs = apply_endo(ctx, raw, basis[a] * basis[b]);
      IncFn rhs = anti ? images[b] * images[a] : images[a] * images[b];
      if (lhs != rhs) {
        auto [x, y] = ctx->intervals[a];
        auto [z, w] = ctx->intervals[b];
        fail(ErrorKind::NotAMorphism, std::string(anti ? "anti-" : "") + "multiplicativity fails on e_" + p.label(x) +
                                          p.label(y) + " * e_" + p.label(z) + p.label(w));
      }
    }
  if (raw.rank() != d) fail(ErrorKind::NotAMorphism, "raw map is not bijective");

  PosetMap mu{std::vector<Element>(p.size()), anti ? MapKind::AntiAutomorphism : MapKind::Automorphism};
  for (Element x = 0; x < p.size(); ++x) {
    const IncFn& ex = images[ctx->idx(x, x)];
    std::size_t hits = 0;
    for (Element y = 0; y < p.size(); ++y) {
      const Scalar& s = ex.at(y, y);
      if (s.is_one()) {
        mu.image[x] = y;
        ++hits;
      } else if (!s.is_zero()) {
        hits = 2;
      }
    }
    if (hits != 1) fail(ErrorKind::NotAMorphism, "image of e_" + p.label(x) + " has no single diagonal support");
  }
  if (!preserves_order(p, p, mu.image, mu.kind))
    fail(ErrorKind::NotAMorphism, "induced poset map does not respect the order");

  // raw' = raw ∘ μ̂^{-1} fixes the diagonal idempotents up to conjugation.
  PosetMap mu_inv = mu.inverse();
  auto raw1 = [&](const IncFn& f) { return apply_endo(ctx, raw, apply_poset_map(mu_inv, f)); };
  IncFn g(ctx);
  for (Element x = 0; x < p.size(); ++x) {
    IncFn ex = IncFn::e(ctx, x, x);
    g = g + raw1(ex) * ex;
  }
  IncFn ginv = g.inverse();
  IncFn sigma(ctx);
  for (std::size_t k = 0; k < d; ++k) {
    auto [x, y] = ctx->intervals[k];
    IncFn img = ginv * raw1(basis[k]) * g;
    for (std::size_t j = 0; j < d; ++j)
      if (j != k && !img[j].is_zero()) fail(ErrorKind::NotAMorphism, "residual map does not preserve e_" + p.label(x) + p.label(y));
    sigma[k] = img[k];
  }
  if (!is_multiplicative_cocycle(sigma)) fail(ErrorKind::InvalidCocycle, "recovered sigma is not a cocycle");

  FiaMorphism out{g, sigma, mu, anti};
  if (out.matrix() != raw) fail(ErrorKind::Internal, "recomposition differs from the raw map");
  return out;
}

std::optional<Vector> multiplicative_is_inner(const IncFn& sigma) {
  if (!is_multiplicative_cocycle(sigma)) fail(ErrorKind::InvalidCocycle, "sigma is not a multiplicative cocycle");
  const auto& ctx = sigma.context();
  auto pc = detail::pair_complex(*ctx);
  Vector eta(ctx->poset.size(), ctx->field.one());
  for (auto [k, from_x] : pc.tree_order) {
    auto [x, y] = ctx->intervals[k];
    if (from_x)
      eta[y] = eta[x] / sigma[k];
    else
      eta[x] = sigma[k] * eta[y];
  }
  for (auto k : pc.pairs) {
    auto [x, y] = ctx->intervals[k];
    if (sigma[k] * eta[y] != eta[x]) return std::nullopt;
  }
  return eta;
}

namespace {

IntMatrix relation_matrix(const detail::PairComplex& pc, std::size_t dim) {
  std::vector<std::size_t> col(dim, kNoInterval);
  for (std::size_t j = 0; j < pc.nontree.size(); ++j) col[pc.nontree[j]] = j;
  IntMatrix r(pc.triples.size(), pc.nontree.size());
  for (std::size_t i = 0; i < pc.triples.size(); ++i) {
    auto [xy, yz, xz] = pc.triples[i];
    if (col[xy] != kNoInterval) r(i, col[xy]) += 1;
    if (col[yz] != kNoInterval) r(i, col[yz]) += 1;
    if (col[xz] != kNoInterval) r(i, col[xz]) -= 1;
  }
  return r;
}

Scalar power(const Scalar& g, const mpz_class& e) {
  Scalar base = sgn(e) < 0 ? g.inverse() : g;
  mpz_class n = abs(e);
  Scalar acc = g.field().one();
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace

MultInnReport analyze_mult_inn(const ContextPtr& ctx) {
  auto pc = detail::pair_complex(*ctx);
  SmithForm snf = smith_normal_form(relation_matrix(pc, ctx->dim()));
  MultInnReport rep;
  rep.invariant_factors = snf.diagonal;

  // Hom(Z/d, K*) is trivial iff gcd(d, |K*|) = 1 for F_p (d = 0 gives
  // |K*|); for Q it is trivial iff d is odd.
  const Field& field = ctx->field;
  std::optional<std::size_t> bad;
  mpz_class z_bad = 1;
  Scalar base = field.one();
  for (std::size_t i = 0; i < snf.diagonal.size() && !bad; ++i) {
    const mpz_class& di = snf.diagonal[i];
    if (field.is_rational()) {
      if (di == 0) {
        bad = i;
        base = field.from_int(2);
      } else if (mpz_even_p(di.get_mpz_t())) {
        bad = i;
        base = field.from_int(-1);
      }
    } else {
      mpz_class m = field.modulus() - 1;
      mpz_class g = gcd(di, m);
      if (g != 1) {
        bad = i;
        z_bad = m / g;
        base = Scalar::residue(primitive_root(field.modulus()), field.modulus());
      }
    }
  }
  rep.holds = !bad.has_value();
  if (bad) {
    IncFn sigma = IncFn::delta(ctx);
    for (auto k : pc.pairs) sigma[k] = field.one();
    for (std::size_t j = 0; j < pc.nontree.size(); ++j) {
      mpz_class t = snf.v(j, *bad) * z_bad;
      sigma[pc.nontree[j]] = power(base, t);
    }
    if (!is_multiplicative_cocycle(sigma) || multiplicative_is_inner(sigma))
      fail(ErrorKind::Internal, "constructed outer cocycle failed validation");
    rep.counterexample = std::move(sigma);
  }
  return rep;
}

bool mult_subset_inn(const ContextPtr& ctx) { return analyze_mult_inn(ctx).holds; }

}  // namespace incalg
