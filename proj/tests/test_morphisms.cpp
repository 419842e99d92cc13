#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "incalg/morphisms.hpp"

using namespace incalg;

namespace {

IncFn random_cocycle(const ContextPtr& ctx, std::mt19937_64& rng) {
  // η(x)/η(y) is always a cocycle.
  Vector eta;
  for (Element x = 0; x < ctx->poset.size(); ++x) eta.push_back(ctx->field.random_nonzero(rng));
  IncFn s(ctx);
  for (std::size_t k = 0; k < ctx->dim(); ++k) s[k] = eta[ctx->intervals[k].first] / eta[ctx->intervals[k].second];
  return s;
}

IncFn diag(const ContextPtr& ctx, const Vector& v) {
  IncFn f(ctx);
  for (Element x = 0; x < v.size(); ++x) f.set(x, x, v[x]);
  return f;
}

IncFn ones(const ContextPtr& ctx) { return IncFn(ctx, Vector(ctx->dim(), ctx->field.one())); }

}  // namespace

TEST_CASE("applying factored morphisms") {
  auto c2 = make_context(fx::chain2(), Field::prime(5));
  std::mt19937_64 rng(1);
  IncFn f = IncFn::random(c2, rng);
  CHECK(identity_morphism(c2)(f) == f);

  FiaMorphism rho = induced_morphism(c2, involutions(c2->poset).front());
  CHECK(rho(IncFn::e(c2, 0, 1)) == IncFn::e(c2, 0, 1));
  CHECK(rho(IncFn::e(c2, 0, 0)) == IncFn::e(c2, 1, 1));

  IncFn sigma = ones(c2);
  sigma.set(0, 1, c2->field.from_int(2));
  CHECK(multiplicative_morphism(sigma)(IncFn::e(c2, 0, 1)) == IncFn::e(c2, 0, 1).scaled(c2->field.from_int(2)));
}

TEST_CASE("decompose recovers the factors") {
  auto c2 = make_context(fx::chain2(), Field::prime(5));
  IncFn u = IncFn::delta(c2) + IncFn::e(c2, 0, 1);
  FiaMorphism m = decompose(c2, inner_morphism(u).matrix(), false);
  // u is determined up to a central factor.
  CHECK(m.u * u.inverse() == IncFn::delta(c2).scaled((m.u * u.inverse()).at(0, 0)));
  CHECK(m.sigma == ones(c2));
  CHECK(m.map.is_identity());

  PosetMap swap = involutions(c2->poset).front();
  FiaMorphism r = decompose(c2, induced_morphism(c2, swap).matrix(), true);
  CHECK(is_central(r.u));
  CHECK(r.sigma == ones(c2));
  CHECK(r.map == swap);

  IncFn sigma = ones(c2);
  sigma.set(0, 1, c2->field.from_int(2));
  FiaMorphism s = decompose(c2, multiplicative_morphism(sigma).matrix(), false);
  CHECK(s.matrix() == multiplicative_morphism(sigma).matrix());
  auto eta = multiplicative_is_inner(sigma);
  REQUIRE(eta);
  CHECK(inner_morphism(diag(c2, *eta)).matrix() == multiplicative_morphism(sigma).matrix());
  // diag(2,1) is a witness up to scaling.
  CHECK((*eta)[0] / (*eta)[1] == c2->field.from_int(2));
}

TEST_CASE("decompose rejects non-morphisms") {
  auto c3 = make_context(fx::chain3(), Field::rationals());
  const std::size_t d = c3->dim();
  Matrix twice = Matrix::identity(c3->field, d).scaled(c3->field.from_int(2));
  CHECK_THROWS_AS(decompose(c3, twice, false), Error);
  try {
    decompose(c3, Matrix::identity(c3->field, d), true);
    FAIL("identity is not an anti-automorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAMorphism);
  }
  Matrix m = Matrix::identity(c3->field, d);
  m(c3->idx(0, 2), c3->idx(0, 1)) = c3->field.one();
  CHECK_THROWS_AS(decompose(c3, m, false), Error);
}

TEST_CASE("random factored morphisms round-trip") {
  std::mt19937_64 rng(9);
  for (Poset p : {fx::chain3(), fx::diamond(), fx::fence(), fx::crown()}) {
    for (Field k : {Field::rationals(), Field::prime(5)}) {
      auto ctx = make_context(p, k);
      auto aut = automorphisms(p);
      auto anti = anti_automorphisms(p);
      for (int t = 0; t < 4; ++t) {
        bool use_anti = !anti.empty() && (t & 1);
        const auto& maps = use_anti ? anti : aut;
        FiaMorphism m{IncFn::random_unit(ctx, rng), random_cocycle(ctx, rng), maps[rng() % maps.size()], use_anti};
        LinearEndo raw = m.matrix();
        FiaMorphism back = decompose(ctx, raw, use_anti);
        CHECK(back.matrix() == raw);
        CHECK(back.map == m.map);
        CHECK(back.u.at(0, 0).is_one());
      }
    }
  }
}

TEST_CASE("inner equality criterion") {
  std::mt19937_64 rng(5);
  auto ctx = make_context(fx::diamond(), Field::prime(3));
  for (int t = 0; t < 30; ++t) {
    IncFn a = IncFn::random_unit(ctx, rng);
    IncFn b = (t % 2) ? a.scaled(ctx->field.from_int(2)) : IncFn::random_unit(ctx, rng);
    bool same = inner_morphism(a).matrix() == inner_morphism(b).matrix();
    CHECK(same == is_central(a * b.inverse()));
  }
}

TEST_CASE("composition of anti-automorphisms") {
  std::mt19937_64 rng(6);
  auto ctx = make_context(fx::diamond(), Field::prime(5));
  auto anti = anti_automorphisms(ctx->poset);
  REQUIRE(!anti.empty());
  FiaMorphism a{IncFn::random_unit(ctx, rng), ones(ctx), anti[0], true};
  FiaMorphism b{IncFn::random_unit(ctx, rng), ones(ctx), anti.back(), true};
  FiaMorphism c = compose(a, b);
  CHECK_FALSE(c.anti);
  IncFn f = IncFn::random(ctx, rng);
  CHECK(c(f) == a(b(f)));
}

TEST_CASE("multiplicative cocycles") {
  auto c3 = make_context(fx::chain3(), Field::prime(7));
  IncFn s = ones(c3);
  s.set(0, 1, c3->field.from_int(3));
  s.set(1, 2, c3->field.from_int(5));
  s.set(0, 2, c3->field.from_int(15));
  CHECK(multiplicative_is_inner(s).has_value());
  s.set(0, 2, c3->field.from_int(2));
  CHECK_THROWS_AS(multiplicative_is_inner(s), Error);

  auto crown = make_context(fx::crown(), Field::prime(5));
  IncFn t = ones(crown);
  t.set(crown->poset.index("b"), crown->poset.index("d"), crown->field.from_int(2));
  CHECK_FALSE(multiplicative_is_inner(t).has_value());

  auto crown2 = make_context(fx::crown(), Field::prime(2));
  CHECK(multiplicative_is_inner(ones(crown2)).has_value());
}

TEST_CASE("Mult in Inn table") {
  CHECK(mult_subset_inn(make_context(fx::fence(), Field::prime(5))));
  CHECK_FALSE(mult_subset_inn(make_context(fx::crown(), Field::prime(5))));
  CHECK(mult_subset_inn(make_context(fx::crown(), Field::prime(2))));
  CHECK_FALSE(mult_subset_inn(make_context(fx::crown(), Field::rationals())));
  CHECK(mult_subset_inn(make_context(fx::chain3(), Field::rationals())));
  CHECK(mult_subset_inn(make_context(fx::diamond(), Field::prime(3))));

  auto rep = analyze_mult_inn(make_context(fx::crown(), Field::prime(5)));
  REQUIRE(rep.counterexample);
  CHECK(is_multiplicative_cocycle(*rep.counterexample));
  CHECK_FALSE(multiplicative_is_inner(*rep.counterexample));
}

TEST_CASE("Smith normal form") {
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(1, 0) = 6;
  a(1, 1) = 8;
  auto s = smith_normal_form(a);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 4);
  IntMatrix b(1, 3);
  b(0, 0) = 6;
  b(0, 1) = 10;
  b(0, 2) = 15;
  auto t = smith_normal_form(b);
  CHECK(t.diagonal[0] == 1);
  CHECK(t.diagonal[1] == 0);
  CHECK(t.diagonal[2] == 0);
}
