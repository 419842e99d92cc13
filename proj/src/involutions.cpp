#include "incalg/involutions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace incalg {

namespace {

DElem map_delem(const PosetMap& m, const DElem& a) { return {apply_poset_map(m, a.f), apply_poset_map(m, a.i)}; }

std::string basis_name(const ContextPtr& ctx, std::size_t b) {
  const std::size_t d = ctx->dim();
  auto [x, y] = ctx->intervals[b % d];
  std::string e = "e_" + ctx->poset.label(x) + "," + ctx->poset.label(y);
  return b < d ? "[" + e + ";0]" : "[0;" + e + "]";
}

bool is_central_delem(const DElem& c, Scalar& k1, Scalar& k2) {
  const auto& ctx = c.context();
  k1 = c.f.at(0, 0);
  k2 = c.i.at(0, 0);
  IncFn d = IncFn::delta(ctx);
  return c.f == d.scaled(k1) && c.i == d.scaled(k2);
}

void check_pair(const InvolutionSpec& a, const InvolutionSpec& b) {
  check_same_context(a.context(), b.context());
}

}  // namespace

// ---------------------------------------------------------------- spec

DElem InvolutionSpec::phi0(const DElem& a) const {
  IncFn f = apply_poset_map(lambda_, a.f);
  IncFn i = apply_poset_map(lambda_, a.i);
  return {f, i.scaled(k_)};
}

DElem InvolutionSpec::operator()(const DElem& a) const { return theta_ * phi0(a) * theta_inv_; }

DMorphism InvolutionSpec::matrix() const {
  return d_endo_matrix(context(), [&](const DElem& a) { return (*this)(a); });
}

InvolutionSpec build(const DElem& theta, const PosetMap& lambda, const Scalar& k) {
  const auto& ctx = theta.context();
  const Poset& p = ctx->poset;
  if (ctx->field.is_char2()) fail(ErrorKind::Char2Unsupported, "involutions are classified only for Char K != 2");
  if (!p.is_connected()) fail(ErrorKind::NotConnected, "poset is not connected");
  if (!(k * k).is_one()) fail(ErrorKind::BadSign, "k = " + k.to_string() + " is not +1 or -1");
  if (!lambda.is_involution() || !preserves_order(p, p, lambda.image, MapKind::AntiAutomorphism))
    fail(ErrorKind::InvalidArgument, "lambda is not an involution of the poset");
  if (!theta.is_unit()) theta.f.inverse();  // NotAUnit with the vanishing entry

  InvolutionSpec spec(theta, lambda, k);
  const std::size_t d = ctx->dim();
  for (std::size_t b = 0; b < 2 * d; ++b) {
    Vector e(2 * d, ctx->field.zero());
    e[b] = ctx->field.one();
    DElem x = d_from_vector(ctx, e);
    if (spec(spec(x)) != x) fail(ErrorKind::NotInvolutive, "Phi^2 differs from the identity on " + basis_name(ctx, b));
  }
  return spec;
}

InvolutionSpec build(const DElem& theta, const PosetMap& lambda, int k) {
  return build(theta, lambda, theta.context()->field.from_int(k));
}

// ---------------------------------------------------------------- hypotheses

HypothesisReport check_hypotheses(const ContextPtr& ctx) { return {analyze_mult_inn(ctx), analyze_der_ider(ctx)}; }

void require_classifiable(const ContextPtr& ctx) {
  if (ctx->field.is_char2()) fail(ErrorKind::Char2Unsupported, "involutions are classified only for Char K != 2");
  if (!ctx->poset.is_connected()) fail(ErrorKind::NotConnected, "poset is not connected");
  auto rep = check_hypotheses(ctx);
  if (!rep.mult.holds && !rep.der.holds)
    fail(ErrorKind::HypothesisFailed, "Mult ⊆ Inn and Der = IDer both fail");
  if (!rep.mult.holds) fail(ErrorKind::HypothesisFailed, "Mult ⊆ Inn fails");
  if (!rep.der.holds) fail(ErrorKind::HypothesisFailed, "Der = IDer fails");
}

// ---------------------------------------------------------------- recognition

InvolutionSpec recognize(const ContextPtr& ctx, const DMorphism& raw) {
  const std::size_t d = ctx->dim();
  if (raw.rows() != 2 * d || raw.cols() != 2 * d || !(raw.field() == ctx->field))
    fail(ErrorKind::ContextMismatch, "raw map has the wrong shape");
  if (!raw.block(0, d, d, d).is_zero()) fail(ErrorKind::UpperRightNonzero, "upper-right block is nonzero");
  if (!(raw * raw).is_identity()) fail(ErrorKind::NotAnInvolution, "raw map does not square to the identity");

  std::vector<DElem> basis, images;
  for (std::size_t b = 0; b < 2 * d; ++b) {
    Vector e(2 * d, ctx->field.zero());
    e[b] = ctx->field.one();
    basis.push_back(d_from_vector(ctx, e));
    images.push_back(d_from_vector(ctx, raw.column(b)));
  }
  for (std::size_t a = 0; a < 2 * d; ++a)
    for (std::size_t b = 0; b < 2 * d; ++b)
      if (d_apply(raw, basis[a] * basis[b]) != images[b] * images[a])
        fail(ErrorKind::NotAnInvolution,
             "anti-multiplicativity fails on " + basis_name(ctx, a) + " * " + basis_name(ctx, b));

  require_classifiable(ctx);

  // Upper-left block: an anti-automorphism Ψ_u ∘ M_σ ∘ ρ_λ of FI, with
  // M_σ = Ψ_{diag η} by Mult ⊆ Inn.
  FiaMorphism phi11 = decompose(ctx, raw.block(0, 0, d, d), true);
  auto eta = multiplicative_is_inner(phi11.sigma);
  if (!eta) fail(ErrorKind::Internal, "multiplicative part is not inner despite Mult ⊆ Inn");
  IncFn diag_eta(ctx);
  for (Element x = 0; x < ctx->poset.size(); ++x) diag_eta.set(x, x, (*eta)[x]);
  IncFn f0 = phi11.u * diag_eta;
  const PosetMap& lambda = phi11.map;

  // A = Ψ_{[f0;0]}^{-1} ∘ raw ∘ ρ̃_λ = (kδ)~ ∘ D̃.
  DMorphism rho = lift_anti(induced_morphism(ctx, lambda));
  DMorphism a = conjugation_matrix(DElem{f0.inverse(), IncFn(ctx)}) * raw * rho;
  Matrix lower_right = a.block(d, d, d, d);
  Scalar k = lower_right(0, 0);
  if (lower_right != Matrix::identity(ctx->field, d).scaled(k))
    fail(ErrorKind::Internal, "residual bimodule block is not scalar");
  LinearEndo der = a.block(d, 0, d, d).scaled(k.inverse());

  DerivationSpec split = split_raw_derivation(ctx, der);
  auto h = additive_is_inner(split.tau);
  if (!h) fail(ErrorKind::Internal, "additive part is not inner despite Der = IDer");
  IncFn ip = split.i + *h;

  DElem theta{f0, -(f0 * ip).scaled(k)};
  InvolutionSpec spec = build(theta, lambda, k);
  if (spec.matrix() != raw) fail(ErrorKind::Internal, "recomposition differs from the raw map");
  return spec;
}

// ---------------------------------------------------------------- normal forms

InvolutionSpec rho_eps(const ContextPtr& ctx, const PosetMap& lambda, const Vector& eps, int k) {
  auto dec = lambda_decomposition(ctx->poset, lambda);
  if (eps.size() != dec.x3.size())
    fail(ErrorKind::InvalidArgument, "epsilon needs one value per fixed point (" + std::to_string(dec.x3.size()) + ")");
  IncFn u = IncFn::delta(ctx);
  for (std::size_t t = 0; t < eps.size(); ++t) {
    if (eps[t].is_zero()) fail(ErrorKind::ZeroEpsilon, "epsilon vanishes at " + ctx->poset.label(dec.x3[t]));
    u.set(dec.x3[t], dec.x3[t], eps[t]);
  }
  return build(DElem{u, IncFn(ctx)}, lambda, k);
}

InvolutionSpec sigma_lambda(const ContextPtr& ctx, const PosetMap& lambda, int k) {
  auto dec = lambda_decomposition(ctx->poset, lambda);
  if (!dec.x3.empty()) fail(ErrorKind::FixedPointsPresent, "sigma_lambda needs a fixed-point-free lambda");
  IncFn w = IncFn::delta(ctx);
  for (Element x : dec.x2) w.set(x, x, -ctx->field.one());
  return build(DElem{w, IncFn(ctx)}, lambda, k);
}

DElem symmetric_decompose(const DElem& theta, const InvolutionSpec& base) {
  const auto& ctx = base.context();
  check_same_context(ctx, theta.context());
  const Poset& p = ctx->poset;
  if (!base.theta().f.is_diagonal() || !base.theta().i.is_zero())
    fail(ErrorKind::InvalidArgument, "base must have a diagonal [u;0] inner factor");
  if (base(theta) != theta) fail(ErrorKind::NotSymmetric, "theta is not fixed by the base involution");
  if (!theta.is_unit()) theta.f.inverse();

  auto dec = lambda_decomposition(p, base.lambda());
  std::vector<Scalar> root(p.size());
  std::string bad;
  for (Element x : dec.x3) {
    auto r = sqrt(theta.f.at(x, x));
    if (!r) {
      bad += (bad.empty() ? "" : ",") + p.label(x);
      continue;
    }
    root[x] = *r;
  }
  if (!bad.empty()) fail(ErrorKind::NotASquare, "f(x,x) is not a square at x = " + bad);

  const Field& k = ctx->field;
  const Scalar half = k.from_int(2).inverse();
  DElem gamma = DElem::zero(ctx);
  for (std::size_t idx = 0; idx < ctx->dim(); ++idx) {
    auto [x, y] = ctx->intervals[idx];
    Part px = dec[x], py = dec[y];
    const Scalar& f = theta.f[idx];
    const Scalar& i = theta.i[idx];
    Scalar v = k.zero(), j = k.zero();
    if (px == Part::X1 && py == Part::X1) {
      if (x == y) v = k.one();
    } else if (px == Part::X2 && py == Part::X2) {
      v = f;
      j = i;
    } else if (px == Part::X1 && py == Part::X2) {
      v = f * half;
      j = i * half;
    } else if (px == Part::X3 && py == Part::X2) {
      v = f;
      j = i;
    } else if (px == Part::X3 && py == Part::X3) {
      v = root[x];
      j = i * half / root[x];
    }
    gamma.f[idx] = v;
    gamma.i[idx] = j;
  }
  if (gamma * base(gamma) != theta) fail(ErrorKind::Internal, "gamma * base(gamma) differs from theta");
  return gamma;
}

// ---------------------------------------------------------------- reduction

Reduction reduce(const InvolutionSpec& phi) {
  const auto& ctx = phi.context();
  const Field& field = ctx->field;
  const DElem& theta = phi.theta();
  Scalar k0, k1;
  DElem c = phi.phi0(theta) * theta.inverse();
  if (!is_central_delem(c, k0, k1)) fail(ErrorKind::Internal, "Phi0(theta) theta^{-1} is not central");

  DElem tp = theta;
  if (phi.sign() == 1) {
    if (!k1.is_zero()) fail(ErrorKind::Internal, "k1 != 0 for a positive sign");
  } else {
    tp = DElem::central(ctx, k0, k1 / field.from_int(2)) * theta;
  }
  if (phi.phi0(tp) != tp.scaled(k0)) fail(ErrorKind::Internal, "re-centred theta is not (anti)symmetric");

  auto dec = lambda_decomposition(ctx->poset, phi.lambda());
  Reduction r{DElem::one(ctx), phi, {}, {}};
  if (!dec.x3.empty()) {
    if (!k0.is_one()) fail(ErrorKind::Internal, "antisymmetric theta with fixed points");
    Vector eps;
    for (Element x : dec.x3) {
      eps.push_back(tp.f.at(x, x));
      r.chi.push_back(square_class(eps.back()));
    }
    r.chi = normalize_classes(r.chi);
    r.base = rho_eps(ctx, phi.lambda(), eps, phi.sign());
    r.gamma = symmetric_decompose(tp * r.base.theta().inverse(), r.base);
  } else if (k0.is_one()) {
    r.type = "rho";
    r.base = rho_eps(ctx, phi.lambda(), {}, phi.sign());
    r.gamma = symmetric_decompose(tp, r.base);
  } else {
    r.type = "sigma";
    r.base = sigma_lambda(ctx, phi.lambda(), phi.sign());
    r.gamma = symmetric_decompose(tp * r.base.theta(), r.base);
  }
  return r;
}

ClassInvariant invariant(const InvolutionSpec& phi) {
  auto r = reduce(phi);
  return {phi.lambda(), phi.sign(), r.chi, r.type};
}

// ---------------------------------------------------------------- equivalence

DMorphism DWitness::matrix() const {
  const auto& ctx = theta.context();
  return conjugation_matrix(theta) * lift_auto(induced_morphism(ctx, alpha)) * lift_k(ctx, k);
}

bool verify_witness(const DWitness& w, const InvolutionSpec& phi1, const InvolutionSpec& phi2) {
  check_pair(phi1, phi2);
  DMorphism m = w.matrix();
  return m * phi1.matrix() == phi2.matrix() * m;
}

namespace {

Verdict inner_unchecked(const InvolutionSpec& phi1, const InvolutionSpec& phi2) {
  const auto& ctx = phi1.context();
  Verdict v;
  if (phi1.lambda() != phi2.lambda()) {
    v.distinguisher = "lambda";
    v.detail = "induced poset involutions differ";
    return v;
  }
  if (phi1.sign() != phi2.sign()) {
    v.distinguisher = "sign";
    v.detail = "signs " + std::to_string(phi1.sign()) + " and " + std::to_string(phi2.sign());
    return v;
  }
  Reduction r1 = reduce(phi1), r2 = reduce(phi2);
  DElem w = DElem::one(ctx);
  if (!r1.chi.empty() || !r2.chi.empty()) {
    if (r1.chi != r2.chi) {
      v.distinguisher = "chi";
      v.detail = "square-class tuples differ up to shift";
      return v;
    }
    auto dec = lambda_decomposition(ctx->poset, phi1.lambda());
    const IncFn& u1 = r1.base.theta().f;
    const IncFn& u2 = r2.base.theta().f;
    Element x0 = dec.x3.front();
    Scalar a = u1.at(x0, x0) / u2.at(x0, x0);
    DElem target{(u2 * u1.inverse()).scaled(a), IncFn(ctx)};
    w = symmetric_decompose(target, r1.base);
  } else if (r1.type != r2.type) {
    v.distinguisher = "chi";
    v.detail = r1.type + "-type vs " + r2.type + "-type";
    return v;
  }
  v.equivalent = true;
  v.witness = DWitness{r2.gamma * w * r1.gamma.inverse(), identity_map(ctx->poset), ctx->field.one()};
  if (!verify_witness(*v.witness, phi1, phi2)) fail(ErrorKind::Internal, "inner witness failed verification");
  return v;
}

}  // namespace

Verdict equivalent_inner(const InvolutionSpec& phi1, const InvolutionSpec& phi2) {
  check_pair(phi1, phi2);
  require_classifiable(phi1.context());
  return inner_unchecked(phi1, phi2);
}

Verdict equivalent(const InvolutionSpec& phi1, const InvolutionSpec& phi2) {
  check_pair(phi1, phi2);
  const auto& ctx = phi1.context();
  require_classifiable(ctx);
  Verdict v;
  if (phi1.sign() != phi2.sign()) {
    v.distinguisher = "sign";
    v.detail = "signs " + std::to_string(phi1.sign()) + " and " + std::to_string(phi2.sign());
    return v;
  }
  bool conjugate_lambda = false;
  for (const auto& alpha : automorphisms(ctx->poset)) {
    // α λ1 α^{-1} = λ2, so α̃^{-1} Φ2 α̃ induces λ1.
    if (compose(alpha, phi1.lambda()).image != compose(phi2.lambda(), alpha).image) continue;
    conjugate_lambda = true;
    PosetMap ainv = alpha.inverse();
    InvolutionSpec pulled = build(map_delem(ainv, phi2.theta()), phi1.lambda(), phi2.k());
    Verdict inner = inner_unchecked(phi1, pulled);
    if (!inner.equivalent) continue;
    // φ = α̃ ∘ Ψ_W = Ψ_{α̃(W)} ∘ α̃.
    v.equivalent = true;
    v.witness = DWitness{map_delem(alpha, inner.witness->theta), alpha, ctx->field.one()};
    if (!verify_witness(*v.witness, phi1, phi2)) fail(ErrorKind::Internal, "witness failed verification");
    return v;
  }
  v.distinguisher = conjugate_lambda ? "chi" : "lambda";
  if (!conjugate_lambda) {
    v.detail = "induced involutions are not conjugate under Aut(X)";
  } else {
    bool typed = lambda_decomposition(ctx->poset, phi1.lambda()).x3.empty();
    v.detail = typed ? "no automorphism matches the rho/sigma type" : "no automorphism matches the square-class tuple";
  }
  return v;
}

// ---------------------------------------------------------------- classification

std::uint64_t inner_class_count(const ContextPtr& ctx, const PosetMap& lambda) {
  auto dec = lambda_decomposition(ctx->poset, lambda);
  if (dec.x3.empty()) return 4;
  auto sk = ctx->field.square_class_count();
  if (!sk) {
    if (dec.x3.size() == 1) return 2;
    fail(ErrorKind::InfiniteClassCount, "S_Q is infinite and |X3| = " + std::to_string(dec.x3.size()));
  }
  std::uint64_t c = 2;
  for (std::size_t t = 1; t < dec.x3.size(); ++t) c *= *sk;
  return c;
}

Classification classify(const ContextPtr& ctx, const PosetMap& lambda, bool general) {
  require_classifiable(ctx);
  const Poset& p = ctx->poset;
  if (!lambda.is_involution() || !preserves_order(p, p, lambda.image, MapKind::AntiAutomorphism))
    fail(ErrorKind::InvalidArgument, "lambda is not an involution of the poset");
  auto dec = lambda_decomposition(p, lambda);
  const Field& field = ctx->field;
  Classification out{lambda, {}, std::nullopt, {}, general};
  const std::size_t n3 = dec.x3.size();

  if (n3 == 0) {
    for (int k : {1, -1}) out.representatives.push_back(rho_eps(ctx, lambda, {}, k));
    for (int k : {1, -1}) out.representatives.push_back(sigma_lambda(ctx, lambda, k));
    out.count = 4;
    return out;
  }
  if (field.is_rational() && n3 >= 2) {
    std::string tuple = n3 == 2 ? "(1, d_2)" : "(1, d_2, ..., d_" + std::to_string(n3) + ")";
    out.schema = "rho_eps o (k delta)~ with k = +1 or -1 and eps = " + tuple +
                 " over X3 with each d_t a signed squarefree integer; two such maps are ";
    out.schema += general ? "equivalent iff they have the same k and the tuples agree up to a global square-class "
                            "shift after an automorphism of X commuting with lambda"
                          : "inner-equivalent iff they have the same k and the same tuple";
    return out;
  }

  // Square-class tuples with first coordinate the identity, as bit vectors
  // over {square, non-square} (a single class in the n3 = 1 case).
  const std::size_t free = n3 - 1;
  std::vector<std::vector<int>> tuples;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    std::vector<int> t(n3, 0);
    for (std::size_t b = 0; b < free; ++b) t[b + 1] = (mask >> b) & 1;
    tuples.push_back(t);
  }

  if (general) {
    std::vector<std::vector<std::size_t>> perms;  // action on X3 positions
    for (const auto& a : automorphisms(p)) {
      if (compose(a, lambda).image != compose(lambda, a).image) continue;
      std::vector<std::size_t> perm(n3);
      for (std::size_t t = 0; t < n3; ++t) {
        Element img = a(dec.x3[t]);
        perm[t] = static_cast<std::size_t>(std::find(dec.x3.begin(), dec.x3.end(), img) - dec.x3.begin());
      }
      perms.push_back(perm);
    }
    auto canon = [&](const std::vector<int>& t) {
      std::vector<int> best;
      for (const auto& perm : perms) {
        std::vector<int> s(n3);
        for (std::size_t q = 0; q < n3; ++q) s[q] = t[perm[q]];
        int shift = s[0];
        for (auto& b : s) b ^= shift;
        if (best.empty() || s < best) best = s;
      }
      return best;
    };
    std::vector<std::vector<int>> kept;
    for (const auto& t : tuples)
      if (canon(t) == t) kept.push_back(t);
    tuples = std::move(kept);
  }

  Scalar nonsquare = field.is_rational() ? field.from_int(-1) : SquareClass(field.modulus(), true).representative();
  for (int k : {1, -1})
    for (const auto& t : tuples) {
      Vector eps;
      for (int b : t) eps.push_back(b ? nonsquare : field.one());
      out.representatives.push_back(rho_eps(ctx, lambda, eps, k));
    }
  out.count = out.representatives.size();
  if (!general && *out.count != inner_class_count(ctx, lambda))
    fail(ErrorKind::Internal, "representative count disagrees with 2|S_K|^{|X3|-1}");
  return out;
}

}  // namespace incalg
