#ifndef INCALG_FIA_HPP
#define INCALG_FIA_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "incalg/matrix.hpp"
#include "incalg/poset.hpp"
#include "incalg/scalar.hpp"

namespace incalg {

inline constexpr std::size_t kNoInterval = static_cast<std::size_t>(-1);

/// Poset, field and the interval indexing shared by all elements of one
/// incidence algebra.
struct FiaContext {
  Poset poset;
  Field field;
  std::vector<std::pair<Element, Element>> intervals;  // lexicographic (x, y), x <= y
  std::vector<std::size_t> index;                      // n*n, kNoInterval when incomparable
  // For interval k = [x,y]: pairs (idx(x,z), idx(z,y)) over x <= z <= y.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> terms;

  std::size_t dim() const noexcept { return intervals.size(); }
  std::size_t idx(Element x, Element y) const { return index[x * poset.size() + y]; }
};

using ContextPtr = std::shared_ptr<const FiaContext>;

ContextPtr make_context(Poset poset, Field field);

/// Element of FI(X,K) = I(X,K): one scalar per interval.
class IncFn {
 public:
  explicit IncFn(ContextPtr ctx);  // zero
  IncFn(ContextPtr ctx, Vector values);

  static IncFn delta(const ContextPtr& ctx);
  /// e_xy; throws NotComparable unless x <= y.
  static IncFn e(const ContextPtr& ctx, Element x, Element y);
  static IncFn random(const ContextPtr& ctx, std::mt19937_64& rng);
  static IncFn random_unit(const ContextPtr& ctx, std::mt19937_64& rng);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Field& field() const noexcept { return ctx_->field; }
  const Poset& poset() const noexcept { return ctx_->poset; }
  const Vector& values() const noexcept { return v_; }

  /// Value at (x, y); zero when x is not below y.
  Scalar at(Element x, Element y) const;
  void set(Element x, Element y, Scalar s);
  Scalar& operator[](std::size_t k) { return v_[k]; }
  const Scalar& operator[](std::size_t k) const { return v_[k]; }

  IncFn operator*(const IncFn& o) const;
  IncFn operator+(const IncFn& o) const;
  IncFn operator-(const IncFn& o) const;
  IncFn operator-() const;
  IncFn scaled(const Scalar& k) const;
  /// Entrywise product.
  IncFn hadamard(const IncFn& o) const;

  bool is_zero() const;
  bool is_unit() const;
  bool is_diagonal() const;
  IncFn inverse() const;  // throws NotAUnit naming the vanishing diagonal entry

  friend bool operator==(const IncFn& a, const IncFn& b);
  friend bool operator!=(const IncFn& a, const IncFn& b) { return !(a == b); }

 private:
  void check(const IncFn& o) const;

  ContextPtr ctx_;
  Vector v_;
};

/// Throws ContextMismatch unless both contexts describe the same algebra.
void check_same_context(const ContextPtr& a, const ContextPtr& b);

/// Indicators of the connected components (diagonal), a basis of the center.
std::vector<IncFn> center_basis(const ContextPtr& ctx);

bool is_central(const IncFn& f);

}  // namespace incalg

#endif
