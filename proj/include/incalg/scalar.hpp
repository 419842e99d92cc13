#ifndef INCALG_SCALAR_HPP
#define INCALG_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "incalg/error.hpp"

namespace incalg {

class Scalar;

// Largest accepted prime modulus. Square roots in F_p are found by scanning,
// which stays cheap below this bound.
inline constexpr std::uint32_t kMaxPrime = 65521;

// Trial-division bound for the numerator and denominator when computing the
// squarefree part of a rational.
inline constexpr std::uint64_t kMaxFactorable = 1'000'000'000'000ULL;

/// The coefficient field: either Q or F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>".
  static Field parse(std::string_view spec);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_char2() const noexcept { return p_ == 2; }

  /// |K*/(K*)^2|, or nullopt when infinite (Q).
  std::optional<std::uint64_t> square_class_count() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_ratio(long long num, long long den) const;
  /// "a/b" or an integer for Q; an integer (reduced mod p) for F_p.
  Scalar parse_scalar(std::string_view text) const;

  /// Uniform element of F_p, or a small rational with |num|,den <= bound.
  Scalar random(std::mt19937_64& rng, int bound = 5) const;
  Scalar random_nonzero(std::mt19937_64& rng, int bound = 5) const;

  /// All elements of F_p in residue order. Throws for Q.
  std::vector<Scalar> elements() const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact field element. Residues are kept in [0, p); rationals are
/// canonical (reduced, positive denominator) as maintained by GMP.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  Scalar() : v_(Residue{0, 0}) {}  // placeholder; not a field element
  static Scalar residue(std::uint64_t value, std::uint32_t p) {
    return Scalar(Residue{static_cast<std::uint32_t>(value % p), p});
  }
  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }

  Field field() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t as_residue() const { return std::get<Residue>(v_).value; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  std::variant<Residue, mpq_class> v_;
};

/// Element of S_K = K*/(K*)^2. For F_p a single square/non-square bit; for
/// Q the signed squarefree integer representing the class.
class SquareClass {
 public:
  static SquareClass identity(const Field& field);

  bool is_identity() const;
  SquareClass operator*(const SquareClass& o) const;
  friend bool operator==(const SquareClass& a, const SquareClass& b);
  friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }

  /// A scalar whose class is this one (1, the least non-residue, or the
  /// squarefree integer itself).
  Scalar representative() const;
  std::string to_string() const;

  // For F_p.
  SquareClass(std::uint32_t p, bool nonsquare) : p_(p), nonsquare_(nonsquare) {}
  // For Q.
  explicit SquareClass(mpz_class squarefree) : p_(0), sf_(std::move(squarefree)) {}

 private:
  std::uint32_t p_ = 0;
  bool nonsquare_ = false;
  mpz_class sf_ = 1;
};

using ClassTuple = std::vector<SquareClass>;

/// The canonical projection K* -> S_K. Throws ZeroArgument on 0.
SquareClass square_class(const Scalar& k);

/// A square root of k in K when one exists. In F_p the smaller residue is
/// returned.
std::optional<Scalar> sqrt(const Scalar& k);

/// True when chi2 = g * chi1 pointwise for a single g in S_K.
bool class_eq_up_to_shift(const ClassTuple& chi1, const ClassTuple& chi2);

/// Shifts chi so that its first entry is the identity class.
ClassTuple normalize_classes(const ClassTuple& chi);

bool is_prime(std::uint64_t n);
/// Smallest quadratic non-residue modulo an odd prime.
std::uint32_t least_nonresidue(std::uint32_t p);
/// Smallest primitive root modulo p.
std::uint32_t primitive_root(std::uint32_t p);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace incalg

#endif
