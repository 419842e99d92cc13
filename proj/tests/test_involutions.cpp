#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "incalg/involutions.hpp"

using namespace incalg;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

PosetMap flip_of(const Poset& p) {
  // The involution of the diamond exchanging 0 and 1.
  return PosetMap{{p.index("1"), p.index("a"), p.index("b"), p.index("0")}, MapKind::AntiAutomorphism};
}

DElem to_delem(const ContextPtr& ctx, const IncFn& f) { return {f, IncFn(ctx)}; }

// A random involution Ψ_γ ∘ B ∘ Ψ_γ^{-1}, i.e. θ = γ B(γ) θ_B.
InvolutionSpec random_conjugate(const InvolutionSpec& b, std::mt19937_64& rng) {
  DElem g = DElem::random_unit(b.context(), rng);
  return build(g * b(g) * b.theta(), b.lambda(), b.k());
}

}  // namespace

TEST_CASE("building involutions") {
  auto c2 = make_context(fx::chain2(), Field::prime(5));
  PosetMap swap = involutions(c2->poset).front();
  InvolutionSpec rho = build(DElem::one(c2), swap, 1);
  CHECK((rho.matrix() * rho.matrix()).is_identity());

  IncFn w = IncFn::delta(c2);
  w.set(1, 1, c2->field.from_int(-1));
  InvolutionSpec sig = build(to_delem(c2, w), swap, 1);
  CHECK(sig.phi0(to_delem(c2, w)) == to_delem(c2, -w));

  // θ = [δ+e_ab; 0]: accepted iff Ψ_θ = Ψ_{Φ0(θ)}.
  DElem th{IncFn::delta(c2) + IncFn::e(c2, 0, 1), IncFn(c2)};
  InvolutionSpec probe = build(DElem::one(c2), swap, 1);
  bool criterion = conjugation_matrix(th) == conjugation_matrix(probe.phi0(th));
  bool accepted = kind_of([&] { build(th, swap, 1); }) == ErrorKind::Internal;
  CHECK(criterion == accepted);

  DElem bad{IncFn::delta(c2) + IncFn::e(c2, 0, 1).scaled(c2->field.from_int(2)), IncFn::e(c2, 0, 0)};
  CHECK(kind_of([&] { build(bad, swap, 1); }) == ErrorKind::NotInvolutive);
  CHECK(kind_of([&] { build(DElem::one(c2), swap, 2); }) == ErrorKind::BadSign);
  auto f2 = make_context(fx::chain2(), Field::prime(2));
  CHECK(kind_of([&] { build(DElem::one(f2), swap, 1); }) == ErrorKind::Char2Unsupported);
}

TEST_CASE("sign and central action") {
  std::mt19937_64 rng(1);
  auto c3 = make_context(fx::chain3(), Field::prime(5));
  PosetMap rev = involutions(c3->poset).front();
  for (int k : {1, -1}) {
    InvolutionSpec phi = random_conjugate(rho_eps(c3, rev, {c3->field.one()}, k), rng);
    CHECK(phi.sign() == k);
    CHECK(phi.induced() == rev);
    for (int t = 0; t < 10; ++t) {
      Scalar k1 = c3->field.random(rng), k2 = c3->field.random(rng);
      CHECK(phi(DElem::central(c3, k1, k2)) == DElem::central(c3, k1, c3->field.from_int(k) * k2));
    }
    // θ and cθ describe the same map and give the same invariants.
    DElem c = DElem::central(c3, c3->field.from_int(2), c3->field.from_int(3));
    InvolutionSpec same = build(c * phi.theta(), rev, k);
    CHECK(same.matrix() == phi.matrix());
    auto a = invariant(phi), b = invariant(same);
    CHECK(a.sign == b.sign);
    CHECK(a.chi == b.chi);
  }
}

TEST_CASE("normal forms") {
  auto c2 = make_context(fx::chain2(), Field::prime(3));
  PosetMap swap = involutions(c2->poset).front();
  CHECK(rho_eps(c2, swap, {}).theta() == DElem::one(c2));
  InvolutionSpec sig = sigma_lambda(c2, swap);
  CHECK(sig(sig.theta()) == -sig.theta());

  auto d = make_context(fx::diamond(), Field::prime(3));
  PosetMap flip = flip_of(d->poset);
  CHECK(rho_eps(d, flip, {d->field.one(), d->field.one()}).matrix() == rho_eps(d, flip, {d->field.one(), d->field.one()}).matrix());
  CHECK(rho_eps(d, flip, {d->field.one(), d->field.one()}).theta() == DElem::one(d));
  CHECK(kind_of([&] { sigma_lambda(d, flip); }) == ErrorKind::FixedPointsPresent);
  CHECK(kind_of([&] { rho_eps(d, flip, {d->field.one(), d->field.zero()}); }) == ErrorKind::ZeroEpsilon);
  InvolutionSpec r = rho_eps(d, flip, {d->field.from_int(2), d->field.one()});
  CHECK(r(r.theta()) == r.theta());
}

TEST_CASE("symmetric decomposition") {
  auto d = make_context(fx::diamond(), Field::prime(5));
  const Field& k = d->field;
  PosetMap flip = flip_of(d->poset);
  InvolutionSpec base = rho_eps(d, flip, {k.one(), k.one()});
  DElem g = symmetric_decompose(DElem::one(d), base);
  CHECK(g * base(g) == DElem::one(d));

  Element a = d->poset.index("a"), b = d->poset.index("b");
  IncFn f = IncFn::delta(d);
  f.set(a, a, k.from_int(4));
  DElem th = to_delem(d, f);
  REQUIRE(base(th) == th);
  DElem g2 = symmetric_decompose(th, base);
  CHECK(g2 * base(g2) == th);

  f.set(a, a, k.from_int(2));
  f.set(b, b, k.from_int(3));
  try {
    symmetric_decompose(to_delem(d, f), base);
    FAIL("expected NotASquare");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASquare);
    CHECK(std::string(e.what()).find("a,b") != std::string::npos);
  }
  DElem asym{IncFn::delta(d) + IncFn::e(d, 0, 1), IncFn(d)};
  CHECK(kind_of([&] { symmetric_decompose(asym, base); }) == ErrorKind::NotSymmetric);
}

TEST_CASE("recognizing raw involutions") {
  auto c2 = make_context(fx::chain2(), Field::prime(3));
  PosetMap swap = involutions(c2->poset).front();
  InvolutionSpec rho = rho_eps(c2, swap, {});
  InvolutionSpec r = recognize(c2, rho.matrix());
  CHECK(is_central(r.theta().f));
  CHECK(r.sign() == 1);

  DElem th{IncFn::delta(c2), IncFn::e(c2, 0, 1)};
  InvolutionSpec shifted = build(th, swap, 1);
  InvolutionSpec back = recognize(c2, shifted.matrix());
  CHECK(back.sign() == 1);
  CHECK(back.lambda() == swap);
  CHECK(back.matrix() == shifted.matrix());
  CHECK(kind_of([&] { build(th, swap, -1); }) == ErrorKind::NotInvolutive);

  DMorphism m = rho.matrix();
  m(0, c2->dim()) = c2->field.one();
  CHECK(kind_of([&] { recognize(c2, m); }) == ErrorKind::UpperRightNonzero);
  CHECK(kind_of([&] { recognize(c2, Matrix::identity(c2->field, 2 * c2->dim())); }) == ErrorKind::NotAnInvolution);

  auto crown = make_context(fx::crown(), Field::prime(5));
  InvolutionSpec cr = build(DElem::one(crown), involutions(crown->poset).front(), 1);
  try {
    recognize(crown, cr.matrix());
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisFailed);
    CHECK(std::string(e.what()).find("Mult") != std::string::npos);
  }

  std::mt19937_64 rng(2);
  for (Field k : {Field::prime(5), Field::rationals()}) {
    auto d = make_context(fx::diamond(), k);
    for (const auto& lam : involutions(d->poset)) {
      auto dec = lambda_decomposition(d->poset, lam);
      for (int s : {1, -1}) {
        Vector eps;
        for (std::size_t t = 0; t < dec.x3.size(); ++t) eps.push_back(k.random_nonzero(rng));
        InvolutionSpec phi = random_conjugate(rho_eps(d, lam, eps, s), rng);
        InvolutionSpec rec = recognize(d, phi.matrix());
        CHECK(rec.matrix() == phi.matrix());
        CHECK(rec.sign() == s);
        CHECK(rec.lambda() == lam);
      }
    }
  }
}

TEST_CASE("inner equivalence") {
  auto c3 = make_context(fx::chain3(), Field::prime(5));
  PosetMap rev = involutions(c3->poset).front();
  auto v = equivalent_inner(rho_eps(c3, rev, {c3->field.one()}, 1), rho_eps(c3, rev, {c3->field.one()}, -1));
  CHECK_FALSE(v.equivalent);
  CHECK(v.distinguisher == "sign");

  auto d = make_context(fx::diamond(), Field::prime(3));
  PosetMap flip = flip_of(d->poset);
  const Field& k = d->field;
  Vector e1{k.one(), k.from_int(2)};
  Vector e2{k.from_int(2), k.one()};
  auto w = equivalent_inner(rho_eps(d, flip, e1), rho_eps(d, flip, e2));
  REQUIRE(w.equivalent);
  CHECK(verify_witness(*w.witness, rho_eps(d, flip, e1), rho_eps(d, flip, e2)) == true);
  auto nw = equivalent_inner(rho_eps(d, flip, {k.one(), k.one()}), rho_eps(d, flip, e1));
  CHECK_FALSE(nw.equivalent);
  CHECK(nw.distinguisher == "chi");

  auto c2 = make_context(fx::chain2(), Field::prime(3));
  PosetMap swap = involutions(c2->poset).front();
  auto rs = equivalent_inner(rho_eps(c2, swap, {}), sigma_lambda(c2, swap));
  CHECK_FALSE(rs.equivalent);
  CHECK(rs.distinguisher == "chi");

  std::mt19937_64 rng(3);
  for (Field f : {Field::prime(3), Field::prime(5), Field::rationals()}) {
    auto ctx = make_context(fx::chain2(), f);
    for (const auto& b : {rho_eps(ctx, swap, {}, 1), rho_eps(ctx, swap, {}, -1), sigma_lambda(ctx, swap, 1),
                          sigma_lambda(ctx, swap, -1)}) {
      InvolutionSpec x = random_conjugate(b, rng), y = random_conjugate(b, rng);
      auto ok = equivalent_inner(x, y);
      REQUIRE(ok.equivalent);
      CHECK(verify_witness(*ok.witness, x, y));
      CHECK(invariant(x).type == invariant(b).type);
    }
  }
}

TEST_CASE("general equivalence") {
  auto d = make_context(fx::diamond(), Field::prime(3));
  PosetMap flip = flip_of(d->poset);
  const Field& k = d->field;
  // Conjugate tuples, equivalent in both senses.
  Vector e1{k.one(), k.one()};
  Vector e2{k.one(), k.from_int(2)};
  Vector e3{k.from_int(2), k.one()};
  InvolutionSpec p2 = rho_eps(d, flip, e2), p3 = rho_eps(d, flip, e3);
  CHECK(equivalent_inner(p2, p3).equivalent);
  auto g = equivalent(p2, p3);
  CHECK(g.equivalent);
  auto ng = equivalent(rho_eps(d, flip, e1), p2);
  CHECK_FALSE(ng.equivalent);

  std::mt19937_64 rng(4);
  InvolutionSpec base = random_conjugate(p2, rng);
  for (const auto& alpha : automorphisms(d->poset)) {
    // α̃ Φ α̃^{-1} = Ψ_{α̃θ} ∘ ρ̃_{αλα^{-1}} ∘ (kδ)~.
    DElem th{apply_poset_map(alpha, base.theta().f), apply_poset_map(alpha, base.theta().i)};
    PosetMap lam = compose(compose(alpha, base.lambda()), alpha.inverse());
    InvolutionSpec moved = build(th, lam, base.k());
    auto v = equivalent(base, moved);
    REQUIRE(v.equivalent);
    CHECK(verify_witness(*v.witness, base, moved));
  }

  auto c2 = make_context(fx::chain2(), Field::prime(3));
  PosetMap swap = involutions(c2->poset).front();
  auto s = equivalent(rho_eps(c2, swap, {}), sigma_lambda(c2, swap, -1));
  CHECK_FALSE(s.equivalent);
  CHECK(s.distinguisher == "sign");
  CHECK_FALSE(equivalent(rho_eps(c2, swap, {}), sigma_lambda(c2, swap, 1)).equivalent);
}

TEST_CASE("classification counts") {
  auto c2 = make_context(fx::chain2(), Field::prime(3));
  PosetMap swap = involutions(c2->poset).front();
  auto cl = classify(c2, swap);
  CHECK(cl.count == 4u);
  CHECK(cl.representatives.size() == 4);

  for (std::uint32_t p : {3u, 5u}) {
    auto c3 = make_context(fx::chain3(), Field::prime(p));
    CHECK(classify(c3, involutions(c3->poset).front()).count == 2u);
    auto d = make_context(fx::diamond(), Field::prime(p));
    auto cd = classify(d, flip_of(d->poset));
    CHECK(cd.count == 4u);
    CHECK(inner_class_count(d, flip_of(d->poset)) == 4u);
    // Representatives are pairwise inner-inequivalent.
    for (std::size_t i = 0; i < cd.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < cd.representatives.size(); ++j)
        CHECK_FALSE(equivalent_inner(cd.representatives[i], cd.representatives[j]).equivalent);
    auto gen = classify(d, flip_of(d->poset), true);
    CHECK(gen.count == 4u);
  }

  auto q = make_context(fx::diamond(), Field::rationals());
  auto cq = classify(q, flip_of(q->poset));
  CHECK_FALSE(cq.count.has_value());
  CHECK_FALSE(cq.schema.empty());
  CHECK(kind_of([&] { inner_class_count(q, flip_of(q->poset)); }) == ErrorKind::InfiniteClassCount);
  auto cq3 = make_context(fx::chain3(), Field::rationals());
  CHECK(classify(cq3, involutions(cq3->poset).front()).count == 2u);

  auto crown = make_context(fx::crown(), Field::prime(5));
  CHECK(kind_of([&] { classify(crown, involutions(crown->poset).front()); }) == ErrorKind::HypothesisFailed);
  auto f2 = make_context(fx::chain2(), Field::prime(2));
  CHECK(kind_of([&] { classify(f2, swap); }) == ErrorKind::Char2Unsupported);
}
