#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "incalg/idealization.hpp"

using namespace incalg;

namespace {

IncFn ones(const ContextPtr& ctx) { return IncFn(ctx, Vector(ctx->dim(), ctx->field.one())); }

}  // namespace

TEST_CASE("multiplication and inverses in D") {
  auto c2 = make_context(fx::chain2(), Field::prime(3));
  auto e = [&](Element x, Element y) { return IncFn::e(c2, x, y); };
  IncFn delta = IncFn::delta(c2);
  DElem a{delta + e(0, 1), e(0, 0)};
  DElem b{delta, e(1, 1)};
  DElem ab = a * b;
  CHECK(ab.f == delta + e(0, 1));
  CHECK(ab.i == e(0, 0) + e(1, 1) + e(0, 1));

  DElem one = DElem::one(c2);
  CHECK(a * one == a);
  CHECK(one * a == a);
  DElem n{delta, e(0, 1)};
  CHECK(n.inverse() == DElem{delta, -e(0, 1)});

  std::mt19937_64 rng(1);
  for (Field k : {Field::rationals(), Field::prime(5)}) {
    auto ctx = make_context(fx::diamond(), k);
    for (int t = 0; t < 30; ++t) {
      DElem x = DElem::random(ctx, rng), y = DElem::random(ctx, rng), z = DElem::random(ctx, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      DElem u = DElem::random_unit(ctx, rng);
      CHECK(u * u.inverse() == DElem::one(ctx));
      CHECK(u.inverse() * u == DElem::one(ctx));
    }
    DElem nonunit{IncFn(ctx), ones(ctx)};
    CHECK_THROWS_AS(nonunit.inverse(), Error);
  }
}

TEST_CASE("center of D") {
  auto d = make_context(fx::diamond(), Field::prime(3));
  CHECK(d_center_basis(d).size() == 2);
  CHECK(d_center_basis(make_context(fx::two_chains(), Field::prime(3))).size() == 4);
  std::mt19937_64 rng(2);
  for (const auto& c : d_center_basis(d))
    for (int t = 0; t < 10; ++t) {
      DElem x = DElem::random(d, rng);
      CHECK(c * x == x * c);
    }
}

TEST_CASE("lifts") {
  std::mt19937_64 rng(3);
  auto ctx = make_context(fx::diamond(), Field::prime(5));
  const Field& k = ctx->field;
  const std::size_t n = 2 * ctx->dim();
  CHECK(lift_auto(identity_morphism(ctx)).is_identity());

  IncFn i = IncFn::random(ctx, rng);
  CHECK(lift_der(inner_derivation(i)) == conjugation_matrix(DElem{IncFn::delta(ctx), -i}));

  PosetMap lam = involutions(ctx->poset).front();
  DMorphism rho = lift_anti(induced_morphism(ctx, lam));
  DMorphism kd = lift_k(ctx, k.from_int(-1));
  CHECK(kd * rho == rho * kd);
  CHECK((rho * rho).is_identity());

  CHECK_THROWS_AS(lift_g(IncFn::e(ctx, 0, 0)), Error);
  DerivationSpec bogus{IncFn(ctx), ones(ctx)};
  CHECK_THROWS_AS(lift_der(bogus), Error);
  CHECK(lift_g(IncFn::delta(ctx)).is_identity());
  CHECK(lift_g(IncFn::delta(ctx)).rows() == n);

  // η̃ ∘ D̃ = (D_η)~ ∘ η̃ with D_η = η ∘ D ∘ η^{-1}, and the g̃ identities.
  for (int t = 0; t < 5; ++t) {
    FiaMorphism eta = inner_morphism(IncFn::random_unit(ctx, rng));
    DerivationSpec dspec{IncFn::random(ctx, rng), IncFn(ctx)};
    LinearEndo em = eta.matrix();
    LinearEndo deta = em * dspec.matrix() * *em.inverse();
    auto split = split_raw_derivation(ctx, deta);
    CHECK(lift_auto(eta) * lift_der(dspec) == lift_der(split) * lift_auto(eta));

    IncFn g = IncFn::delta(ctx).scaled(k.random_nonzero(rng));
    DerivationSpec gd{dspec.i * g, IncFn(ctx)};
    CHECK(lift_g(g) * lift_der(dspec) == lift_der(gd) * lift_g(g));
    CHECK(lift_auto(eta) * lift_g(g) == lift_g(eta(g)) * lift_auto(eta));

    FiaMorphism r{IncFn::random_unit(ctx, rng), ones(ctx), lam, true};
    LinearEndo rm = r.matrix();
    auto split2 = split_raw_derivation(ctx, rm * dspec.matrix() * *rm.inverse());
    CHECK(lift_anti(r) * lift_der(dspec) == lift_der(split2) * lift_anti(r));
  }
}

TEST_CASE("inner automorphisms of D") {
  std::mt19937_64 rng(4);
  for (Field k : {Field::prime(3), Field::rationals()}) {
    auto ctx = make_context(fx::chain2(), k);
    CHECK(inner_auto_D(DElem::one(ctx)).is_identity());
    for (int t = 0; t < 10; ++t) {
      DElem th = DElem::random_unit(ctx, rng);
      CHECK(inner_auto_D(th) == conjugation_matrix(th));
      CHECK(conjugation_matrix({th.f, th.f}) == conjugation_matrix({th.f, IncFn(ctx)}));
      CHECK(conjugation_matrix({th.f, -th.f}) == conjugation_matrix({th.f, IncFn(ctx)}));
    }
    IncFn i = IncFn::random(ctx, rng);
    CHECK(inner_auto_D({IncFn::delta(ctx), i}) == lift_der(inner_derivation(-i)));
  }
}

TEST_CASE("extension properties for anti-automorphisms") {
  std::mt19937_64 rng(5);
  auto ctx = make_context(fx::diamond(), Field::prime(7));
  for (const auto& lam : involutions(ctx->poset)) {
    FiaMorphism rho = induced_morphism(ctx, lam);
    LinearEndo bar = extend(rho);
    CHECK((bar * bar).is_identity());
    for (int t = 0; t < 10; ++t) {
      IncFn f = IncFn::random(ctx, rng), i = IncFn::random(ctx, rng), g = IncFn::random(ctx, rng);
      CHECK(apply_endo(ctx, bar, f * i * g) == rho(g) * apply_endo(ctx, bar, i) * rho(f));
    }
  }
  auto anti = anti_automorphisms(ctx->poset);
  FiaMorphism a{IncFn::random_unit(ctx, rng), ones(ctx), anti.front(), true};
  FiaMorphism b = inner_morphism(IncFn::random_unit(ctx, rng));
  CHECK(extend(compose(a, b)) == extend(a) * extend(b));
}

TEST_CASE("anti-isomorphisms between posets") {
  std::mt19937_64 rng(6);
  Field k = Field::prime(5);
  auto c2 = d_anti_isomorphic(fx::chain2(), fx::chain2(), k);
  REQUIRE(c2);
  CHECK(c2->lambda.image == std::vector<Element>{1, 0});
  auto vl = d_anti_isomorphic(fx::vee(), fx::wedge(), k);
  REQUIRE(vl);
  for (int t = 0; t < 20; ++t) {
    DElem a = DElem::random(vl->from, rng), b = DElem::random(vl->from, rng);
    CHECK((*vl)(a * b) == (*vl)(b) * (*vl)(a));
    CHECK(d_from_vector(vl->to, vl->upsilon.apply(d_vector(a))) == (*vl)(a));
  }
  CHECK_FALSE(d_anti_isomorphic(fx::vee(), fx::vee(), k));
}
