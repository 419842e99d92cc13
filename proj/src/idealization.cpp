#include "incalg/idealization.hpp"

namespace incalg {

DElem DElem::zero(const ContextPtr& ctx) { return {IncFn(ctx), IncFn(ctx)}; }
DElem DElem::one(const ContextPtr& ctx) { return {IncFn::delta(ctx), IncFn(ctx)}; }

DElem DElem::central(const ContextPtr& ctx, const Scalar& k1, const Scalar& k2) {
  IncFn d = IncFn::delta(ctx);
  return {d.scaled(k1), d.scaled(k2)};
}

DElem DElem::random(const ContextPtr& ctx, std::mt19937_64& rng) {
  return {IncFn::random(ctx, rng), IncFn::random(ctx, rng)};
}

DElem DElem::random_unit(const ContextPtr& ctx, std::mt19937_64& rng) {
  return {IncFn::random_unit(ctx, rng), IncFn::random(ctx, rng)};
}

DElem DElem::operator*(const DElem& o) const { return {f * o.f, f * o.i + i * o.f}; }
DElem DElem::operator+(const DElem& o) const { return {f + o.f, i + o.i}; }
DElem DElem::operator-(const DElem& o) const { return {f - o.f, i - o.i}; }
DElem DElem::operator-() const { return {-f, -i}; }
DElem DElem::scaled(const Scalar& k) const { return {f.scaled(k), i.scaled(k)}; }

DElem DElem::inverse() const {
  IncFn finv = f.inverse();
  return {finv, -(finv * i * finv)};
}

std::vector<DElem> d_center_basis(const ContextPtr& ctx) {
  std::vector<DElem> out;
  auto z = center_basis(ctx);
  for (const auto& e : z) out.push_back({e, IncFn(ctx)});
  for (const auto& e : z) out.push_back({IncFn(ctx), e});
  return out;
}

Vector d_vector(const DElem& a) {
  Vector v = a.f.values();
  v.insert(v.end(), a.i.values().begin(), a.i.values().end());
  return v;
}

DElem d_from_vector(const ContextPtr& ctx, const Vector& v) {
  const std::size_t d = ctx->dim();
  if (v.size() != 2 * d) fail(ErrorKind::ContextMismatch, "vector length does not match D(X,K)");
  return {IncFn(ctx, Vector(v.begin(), v.begin() + d)), IncFn(ctx, Vector(v.begin() + d, v.end()))};
}

DMorphism d_endo_matrix(const ContextPtr& ctx, const std::function<DElem(const DElem&)>& map) {
  const std::size_t d = ctx->dim();
  std::vector<Vector> cols;
  cols.reserve(2 * d);
  for (std::size_t k = 0; k < 2 * d; ++k) {
    Vector e(2 * d, ctx->field.zero());
    e[k] = ctx->field.one();
    cols.push_back(d_vector(map(d_from_vector(ctx, e))));
  }
  return Matrix::from_columns(ctx->field, 2 * d, cols);
}

DElem d_apply(const DMorphism& m, const DElem& a) { return d_from_vector(a.context(), m.apply(d_vector(a))); }

DMorphism d_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  const std::size_t n = a.rows();
  Matrix out(a.field(), 2 * n, 2 * n);
  out.set_block(0, 0, a);
  out.set_block(0, n, b);
  out.set_block(n, 0, c);
  out.set_block(n, n, d);
  return out;
}

LinearEndo extend(const FiaMorphism& phi) { return phi.matrix(); }

DMorphism lift_auto(const FiaMorphism& eta) {
  if (eta.anti) fail(ErrorKind::InvalidArgument, "lift_auto expects an automorphism");
  Matrix m = eta.matrix();
  Matrix z(m.field(), m.rows(), m.cols());
  return d_blocks(m, z, z, extend(eta));
}

DMorphism lift_anti(const FiaMorphism& rho) {
  if (!rho.anti) fail(ErrorKind::InvalidArgument, "lift_anti expects an anti-automorphism");
  Matrix m = rho.matrix();
  Matrix z(m.field(), m.rows(), m.cols());
  return d_blocks(m, z, z, extend(rho));
}

DMorphism lift_g(const IncFn& g) {
  if (!is_central(g)) fail(ErrorKind::NotCentral, "g is not central");
  if (!g.is_unit()) g.inverse();
  const auto& ctx = g.context();
  Matrix id = Matrix::identity(ctx->field, ctx->dim());
  Matrix z(ctx->field, ctx->dim(), ctx->dim());
  Matrix mul = endo_matrix(ctx, [&](const IncFn& f) { return g * f; });
  return d_blocks(id, z, z, mul);
}

DMorphism lift_k(const ContextPtr& ctx, const Scalar& k) { return lift_g(IncFn::delta(ctx).scaled(k)); }

DMorphism lift_der(const DerivationSpec& d) {
  const auto& ctx = d.i.context();
  std::mt19937_64 rng(0xd3);
  Matrix dm = d.matrix();
  if (!leibniz_check(ctx, dm, 0, rng)) fail(ErrorKind::NotADerivation, "Leibniz rule fails");
  Matrix id = Matrix::identity(ctx->field, ctx->dim());
  Matrix z(ctx->field, ctx->dim(), ctx->dim());
  return d_blocks(id, z, dm, id);
}

DMorphism inner_auto_D(const DElem& theta) {
  IncFn finv = theta.f.inverse();
  return lift_auto(inner_morphism(theta.f)) * lift_der(inner_derivation(-(finv * theta.i)));
}

DMorphism conjugation_matrix(const DElem& theta) {
  DElem inv = theta.inverse();
  return d_endo_matrix(theta.context(), [&](const DElem& a) { return theta * a * inv; });
}

IncFn transfer_anti(const PosetMap& lambda, const IncFn& f, const ContextPtr& to) {
  const auto& from = f.context();
  IncFn out(to);
  for (std::size_t k = 0; k < from->dim(); ++k) {
    auto [x, y] = from->intervals[k];
    out.set(lambda(y), lambda(x), f[k]);
  }
  return out;
}

DElem AntiIsomorphism::operator()(const DElem& a) const {
  check_same_context(a.context(), from);
  return {transfer_anti(lambda, a.f, to), transfer_anti(lambda, a.i, to)};
}

std::optional<AntiIsomorphism> d_anti_isomorphic(const Poset& x, const Poset& y, const Field& field) {
  auto found = isomorphisms(x, y, MapKind::AntiAutomorphism, 1);
  if (found.empty()) return std::nullopt;
  AntiIsomorphism out{found.front(), make_context(x, field), make_context(y, field), Matrix(field, 0, 0)};
  const std::size_t dx = out.from->dim(), dy = out.to->dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < 2 * dx; ++k) {
    Vector e(2 * dx, field.zero());
    e[k] = field.one();
    cols.push_back(d_vector(out(d_from_vector(out.from, e))));
  }
  out.upsilon = Matrix::from_columns(field, 2 * dy, cols);
  return out;
}

}  // namespace incalg
