#include "incalg/derivations.hpp"

#include "cochain.hpp"

namespace incalg {

IncFn DerivationSpec::operator()(const IncFn& f) const { return f * i - i * f + tau.hadamard(f); }

LinearEndo DerivationSpec::matrix() const {
  return endo_matrix(i.context(), [&](const IncFn& f) { return (*this)(f); });
}

DerivationSpec zero_derivation(const ContextPtr& ctx) { return {IncFn(ctx), IncFn(ctx)}; }

DerivationSpec inner_derivation(const IncFn& i) { return {i, IncFn(i.context())}; }

DerivationSpec additive_derivation(const IncFn& tau) {
  if (!is_additive_cocycle(tau)) fail(ErrorKind::InvalidCocycle, "tau is not an additive cocycle");
  return {IncFn(tau.context()), tau};
}

bool is_additive_cocycle(const IncFn& tau) {
  const auto& ctx = tau.context();
  for (std::size_t k = 0; k < ctx->dim(); ++k)
    if (ctx->intervals[k].first == ctx->intervals[k].second && !tau[k].is_zero()) return false;
  for (const auto& t : detail::pair_complex(*ctx).triples)
    if (tau[t[0]] + tau[t[1]] != tau[t[2]]) return false;
  return true;
}

bool leibniz_check(const ContextPtr& ctx, const LinearEndo& raw, std::size_t trials, std::mt19937_64& rng) {
  auto d = [&](const IncFn& f) { return apply_endo(ctx, raw, f); };
  std::vector<IncFn> basis;
  for (auto [x, y] : ctx->intervals) basis.push_back(IncFn::e(ctx, x, y));
  for (const auto& f : basis)
    for (const auto& g : basis)
      if (d(f * g) != d(f) * g + f * d(g)) return false;
  for (std::size_t t = 0; t < trials; ++t) {
    IncFn f = IncFn::random(ctx, rng), g = IncFn::random(ctx, rng);
    if (d(f * g) != d(f) * g + f * d(g)) return false;
  }
  return true;
}

bool leibniz_check(const DerivationSpec& d, std::size_t trials, std::mt19937_64& rng) {
  return leibniz_check(d.i.context(), d.matrix(), trials, rng);
}

std::optional<IncFn> additive_is_inner(const IncFn& tau, std::optional<Element> anchor) {
  if (!is_additive_cocycle(tau)) fail(ErrorKind::InvalidCocycle, "tau is not an additive cocycle");
  const auto& ctx = tau.context();
  const Poset& p = ctx->poset;
  const Field& k = ctx->field;

  if (!anchor) {
    auto all = p.all_comparable_elements();
    if (!all.empty()) anchor = all.front();
  } else {
    for (Element y = 0; y < p.size(); ++y)
      if (!p.comparable(*anchor, y))
        fail(ErrorKind::InvalidArgument, "anchor " + p.label(*anchor) + " is not comparable with " + p.label(y));
  }

  IncFn f(ctx);
  if (anchor) {
    Element x0 = *anchor;
    for (Element x = 0; x < p.size(); ++x)
      f.set(x, x, p.leq(x, x0) ? -tau.at(x, x0) : tau.at(x0, x));
    return f;  // always a witness when an anchor exists
  }

  auto pc = detail::pair_complex(*ctx);
  Vector c(p.size(), k.zero());
  for (auto [idx, from_x] : pc.tree_order) {
    auto [x, y] = ctx->intervals[idx];
    if (from_x)
      c[y] = c[x] + tau[idx];
    else
      c[x] = c[y] - tau[idx];
  }
  for (auto idx : pc.pairs) {
    auto [x, y] = ctx->intervals[idx];
    if (c[y] - c[x] != tau[idx]) return std::nullopt;
  }
  for (Element x = 0; x < p.size(); ++x) f.set(x, x, c[x]);
  return f;
}

DerIderReport analyze_der_ider(const ContextPtr& ctx) {
  auto pc = detail::pair_complex(*ctx);
  const Field& k = ctx->field;
  std::vector<std::size_t> col(ctx->dim(), kNoInterval);
  for (std::size_t j = 0; j < pc.nontree.size(); ++j) col[pc.nontree[j]] = j;
  Matrix r(k, pc.triples.size(), pc.nontree.size());
  for (std::size_t i = 0; i < pc.triples.size(); ++i) {
    auto [xy, yz, xz] = pc.triples[i];
    if (col[xy] != kNoInterval) r(i, col[xy]) += k.one();
    if (col[yz] != kNoInterval) r(i, col[yz]) += k.one();
    if (col[xz] != kNoInterval) r(i, col[xz]) -= k.one();
  }
  DerIderReport rep;
  rep.unknowns = pc.nontree.size();
  rep.rank = r.rank();
  rep.holds = rep.rank == rep.unknowns;
  if (!rep.holds) {
    Vector v = r.kernel().front();
    IncFn tau(ctx);
    for (std::size_t j = 0; j < pc.nontree.size(); ++j) tau[pc.nontree[j]] = v[j];
    if (!is_additive_cocycle(tau) || additive_is_inner(tau))
      fail(ErrorKind::Internal, "constructed outer additive cocycle failed validation");
    rep.counterexample = std::move(tau);
  }
  return rep;
}

bool der_equals_ider(const ContextPtr& ctx) { return analyze_der_ider(ctx).holds; }

DerivationSpec split_raw_derivation(const ContextPtr& ctx, const LinearEndo& raw) {
  const std::size_t d = ctx->dim();
  if (raw.rows() != d || raw.cols() != d) fail(ErrorKind::ContextMismatch, "raw map has the wrong shape");
  std::mt19937_64 rng(0x5eed);
  if (!leibniz_check(ctx, raw, 0, rng)) fail(ErrorKind::NotADerivation, "Leibniz rule fails on the basis");

  IncFn tau(ctx);
  for (std::size_t k = 0; k < d; ++k) tau[k] = raw(k, k);

  // Residual raw - L_τ as D_i: unknowns i, one equation per matrix entry.
  Matrix sys(ctx->field, d * d, d);
  Vector rhs(d * d, ctx->field.zero());
  std::vector<IncFn> basis;
  for (auto [x, y] : ctx->intervals) basis.push_back(IncFn::e(ctx, x, y));
  for (std::size_t j = 0; j < d; ++j) {
    DerivationSpec dj = inner_derivation(basis[j]);
    for (std::size_t k = 0; k < d; ++k) {
      IncFn img = dj(basis[k]);
      for (std::size_t r = 0; r < d; ++r) sys(k * d + r, j) = img[r];
    }
  }
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) rhs[k * d + r] = raw(r, k) - (r == k ? tau[k] : ctx->field.zero());
  auto sol = sys.solve(rhs);
  if (!sol) fail(ErrorKind::SplitFailed, "residual is not an inner derivation");

  IncFn i(ctx, *sol);
  for (const auto& comp : ctx->poset.components()) {
    Scalar shift = i.at(comp.front(), comp.front());
    for (Element x : comp) i.set(x, x, i.at(x, x) - shift);
  }
  DerivationSpec out{i, tau};
  if (!is_additive_cocycle(tau) || out.matrix() != raw) fail(ErrorKind::SplitFailed, "recomposition differs from raw");
  return out;
}

}  // namespace incalg
