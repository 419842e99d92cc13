#include <random>

#include "doctest.h"
#include "incalg/scalar.hpp"

using namespace incalg;

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("F5").modulus() == 5);
  CHECK(Field::parse("F2").is_char2());
  CHECK_THROWS_AS(Field::parse("F6"), Error);
  CHECK_THROWS_AS(Field::parse("R"), Error);
  CHECK(Field::parse("F5").square_class_count() == 2u);
  CHECK(Field::parse("F2").square_class_count() == 1u);
  CHECK_FALSE(Field::rationals().square_class_count().has_value());
}

TEST_CASE("scalar parsing and canonical form") {
  Field q = Field::rationals();
  CHECK(q.parse_scalar("6/4").to_string() == "3/2");
  CHECK(q.parse_scalar("-2/-4").to_string() == "1/2");
  Field f7 = Field::prime(7);
  CHECK(f7.parse_scalar("-1").as_residue() == 6);
  CHECK(f7.parse_scalar("1/2").as_residue() == 4);
  CHECK_THROWS_AS(f7.parse_scalar("1/7"), Error);
  CHECK_THROWS_AS(q.parse_scalar("x"), Error);
}

TEST_CASE("square classes") {
  Field f5 = Field::prime(5);
  CHECK(square_class(f5.from_int(4)).is_identity());
  CHECK_FALSE(square_class(f5.from_int(2)).is_identity());
  // Squares mod 5 by enumeration.
  for (int k = 1; k < 5; ++k) {
    bool sq = false;
    for (int m = 1; m < 5; ++m) sq |= (m * m) % 5 == k;
    CHECK(square_class(f5.from_int(k)).is_identity() == sq);
  }
  Field q = Field::rationals();
  CHECK(square_class(q.from_int(8)).to_string() == "2");
  CHECK(square_class(q.from_ratio(-3, 12)).to_string() == "-1");
  CHECK(square_class(q.from_ratio(5, 3)).to_string() == "15");
  CHECK_THROWS_AS(square_class(q.zero()), Error);
}

TEST_CASE("square roots") {
  Field q = Field::rationals();
  CHECK(*sqrt(q.from_ratio(9, 4)) == q.from_ratio(3, 2));
  CHECK_FALSE(sqrt(q.from_int(-4)).has_value());
  CHECK_FALSE(sqrt(q.from_int(2)).has_value());
  Field f5 = Field::prime(5);
  CHECK(sqrt(f5.from_int(4))->as_residue() == 2);
  Field f7 = Field::prime(7);
  CHECK_FALSE(sqrt(f7.from_int(3)).has_value());
}

TEST_CASE("class equality up to shift") {
  Field f5 = Field::prime(5);
  SquareClass id = SquareClass::identity(f5), ns = square_class(f5.from_int(2));
  CHECK(class_eq_up_to_shift({id}, {ns}));
  CHECK_FALSE(class_eq_up_to_shift({id, id}, {id, ns}));
  Field q = Field::rationals();
  ClassTuple a{square_class(q.from_int(2)), square_class(q.from_int(3))};
  ClassTuple b{square_class(q.from_int(10)), square_class(q.from_int(15))};
  CHECK(class_eq_up_to_shift(a, b));
  CHECK_THROWS_AS(class_eq_up_to_shift(a, {id}), Error);
  CHECK(normalize_classes(b).front().is_identity());
}

TEST_CASE("field axioms and class properties on random scalars") {
  std::mt19937_64 rng(11);
  for (Field k : {Field::rationals(), Field::prime(5), Field::prime(13)}) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = k.random(rng), b = k.random(rng), c = k.random(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == k.zero());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == k.one());
        Scalar m = k.random_nonzero(rng);
        CHECK(square_class(a * m * m) == square_class(a));
        if (!b.is_zero()) CHECK(square_class(a * b) == square_class(a) * square_class(b));
        CHECK(sqrt(a).has_value() == square_class(a).is_identity());
        if (auto r = sqrt(a)) CHECK(*r * *r == a);
      }
    }
  }
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(Field::prime(5).one() + Field::prime(7).one(), Error);
  CHECK_THROWS_AS(Field::prime(5).one() * Field::rationals().one(), Error);
}
