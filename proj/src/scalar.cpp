#include "incalg/scalar.hpp"

#include <charconv>
#include <functional>

namespace incalg {

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Signed squarefree part of a nonzero integer with |n| <= kMaxFactorable.
mpz_class squarefree_part(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a > mpz_class(std::to_string(kMaxFactorable)))
    fail(ErrorKind::SizeLimit, "squarefree part requested for |n| > 10^12: " + n.get_str());
  std::uint64_t m = a.get_ui();
  std::uint64_t sf = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e & 1) sf *= d;
  }
  sf *= m;
  mpz_class out;
  mpz_set_ui(out.get_mpz_t(), sf);
  return sgn(n) < 0 ? mpz_class(-out) : out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t least_nonresidue(std::uint32_t p) {
  for (std::uint32_t a = 2; a < p; ++a)
    if (pow_mod(a, (p - 1) / 2, p) == p - 1) return a;
  fail(ErrorKind::InvalidArgument, "no quadratic non-residue mod " + std::to_string(p));
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorKind::Internal, "no primitive root mod " + std::to_string(p));
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (p > kMaxPrime)
    fail(ErrorKind::SizeLimit, "prime modulus above " + std::to_string(kMaxPrime));
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q" || spec == "q") return rationals();
  if (spec.size() >= 2 && (spec[0] == 'F' || spec[0] == 'f')) {
    std::uint64_t p = 0;
    auto body = spec.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) {
      if (p > kMaxPrime) fail(ErrorKind::SizeLimit, "prime modulus too large: " + std::string(spec));
      if (!is_prime(p)) fail(ErrorKind::ParseError, "modulus is not prime: " + std::string(spec));
      return Field(static_cast<std::uint32_t>(p));
    }
  }
  fail(ErrorKind::ParseError, "field must be \"Q\" or \"F<p>\", got \"" + std::string(spec) + "\"");
}

std::optional<std::uint64_t> Field::square_class_count() const {
  if (is_rational()) return std::nullopt;
  return p_ == 2 ? 1 : 2;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (is_rational()) return Scalar::rational(mpq_class(mpz_class(std::to_string(n))));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_ratio(long long num, long long den) const {
  if (den == 0) fail(ErrorKind::ZeroArgument, "zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) fail(ErrorKind::ParseError, "empty scalar");
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class z;
    std::string body = part;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    if (body.empty() || z.set_str(body, 10) != 0) fail(ErrorKind::ParseError, "bad scalar \"" + s + "\"");
    return z;
  };
  mpz_class num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in \"" + s + "\"");
  if (is_rational()) return Scalar::rational(mpq_class(num, den));
  mpz_class pm(p_);
  mpz_class n = num % pm, d = den % pm;
  if (n < 0) n += pm;
  if (d < 0) d += pm;
  if (d == 0) fail(ErrorKind::ParseError, "denominator vanishes mod p in \"" + s + "\"");
  return Scalar::residue(n.get_ui(), p_) / Scalar::residue(d.get_ui(), p_);
}

Scalar Field::random(std::mt19937_64& rng, int bound) const {
  if (!is_rational()) return Scalar::residue(rng() % p_, p_);
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return from_ratio(num(rng), den(rng));
}

Scalar Field::random_nonzero(std::mt19937_64& rng, int bound) const {
  for (;;) {
    Scalar s = random(rng, bound);
    if (!s.is_zero()) return s;
  }
}

std::vector<Scalar> Field::elements() const {
  if (is_rational()) fail(ErrorKind::SizeLimit, "Q has infinitely many elements");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint32_t r = 0; r < p_; ++r) out.push_back(Scalar::residue(r, p_));
  return out;
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(v_).modulus);
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  auto a = std::get_if<Residue>(&v_);
  auto b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
    fail(ErrorKind::DomainMismatch, "scalars from different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroArgument, "inverse of zero");
  if (auto r = std::get_if<Residue>(&v_)) return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  mpq_class q = 1 / std::get<mpq_class>(v_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) check_same_field(o);
    std::uint32_t s = a->value + b->value;
    a->value = s >= a->modulus ? s - a->modulus : s;
    return *this;
  }
  check_same_field(o);
  std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) check_same_field(o);
    a->value = a->value >= b->value ? a->value - b->value : a->value + a->modulus - b->value;
    return *this;
  }
  check_same_field(o);
  std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) check_same_field(o);
    a->value = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a->value) * b->value % a->modulus);
    return *this;
  }
  check_same_field(o);
  std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto a = std::get_if<Residue>(&v_)) return Scalar(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
  mpq_class q = -std::get<mpq_class>(v_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto x = std::get_if<Scalar::Residue>(&a.v_);
  auto y = std::get_if<Scalar::Residue>(&b.v_);
  if (x && y) return x->value == y->value && x->modulus == y->modulus;
  if (x || y) return false;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::size_t Scalar::hash() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value;
  return std::hash<std::string>{}(to_string());
}

// ---------------------------------------------------------------- square classes

SquareClass SquareClass::identity(const Field& field) {
  if (field.is_rational()) return SquareClass(mpz_class(1));
  return SquareClass(field.modulus(), false);
}

bool SquareClass::is_identity() const { return p_ ? !nonsquare_ : sf_ == 1; }

SquareClass SquareClass::operator*(const SquareClass& o) const {
  if (p_ != o.p_) fail(ErrorKind::DomainMismatch, "square classes from different fields");
  if (p_) return SquareClass(p_, nonsquare_ != o.nonsquare_);
  mpz_class g = gcd(sf_, o.sf_);
  mpz_class prod = sf_ * o.sf_;
  mpz_class out = prod / (g * g);
  return SquareClass(out);
}

bool operator==(const SquareClass& a, const SquareClass& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ ? a.nonsquare_ == b.nonsquare_ : a.sf_ == b.sf_;
}

Scalar SquareClass::representative() const {
  if (p_) return Scalar::residue(nonsquare_ ? least_nonresidue(p_) : 1, p_);
  return Scalar::rational(mpq_class(sf_));
}

std::string SquareClass::to_string() const {
  if (p_) return nonsquare_ ? "non-square" : "square";
  return sf_.get_str();
}

SquareClass square_class(const Scalar& k) {
  if (k.is_zero()) fail(ErrorKind::ZeroArgument, "square class of zero");
  if (!k.is_rational()) {
    std::uint32_t p = k.field().modulus();
    if (p == 2) return SquareClass(2, false);
    return SquareClass(p, pow_mod(k.as_residue(), (p - 1) / 2, p) != 1);
  }
  const mpq_class& q = k.as_rational();
  SquareClass a(squarefree_part(q.get_num()));
  SquareClass b(squarefree_part(q.get_den()));
  return a * b;
}

std::optional<Scalar> sqrt(const Scalar& k) {
  if (k.is_rational()) {
    const mpq_class& q = k.as_rational();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Scalar::rational(mpq_class(n, d));
  }
  std::uint32_t p = k.field().modulus();
  std::uint64_t target = k.as_residue();
  for (std::uint64_t r = 0; r <= p / 2; ++r)
    if (r * r % p == target) return Scalar::residue(r, p);
  return std::nullopt;
}

bool class_eq_up_to_shift(const ClassTuple& chi1, const ClassTuple& chi2) {
  if (chi1.size() != chi2.size()) fail(ErrorKind::DomainMismatch, "class tuples of different length");
  if (chi1.empty()) return true;
  // Every class is its own inverse in S_K.
  SquareClass shift = chi2[0] * chi1[0];
  for (std::size_t i = 1; i < chi1.size(); ++i)
    if (chi2[i] * chi1[i] != shift) return false;
  return true;
}

ClassTuple normalize_classes(const ClassTuple& chi) {
  ClassTuple out;
  out.reserve(chi.size());
  for (const auto& c : chi) out.push_back(c * chi.front());
  return out;
}

}  // namespace incalg
