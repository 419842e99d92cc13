#ifndef INCALG_ORACLE_HPP
#define INCALG_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "incalg/matrix.hpp"
#include "incalg/poset.hpp"

// Brute-force ground truth over F_p on tiny instances. Arithmetic here is
// self-contained and shares nothing with the decision procedures.
namespace incalg::oracle {

inline constexpr std::uint64_t kDefaultLimit = 200000;

enum class Ring { FI, D };

using Elem = std::vector<std::uint32_t>;
/// dim x dim, column-major; column j is the image of basis j.
using RawMap = std::vector<std::uint32_t>;

class SmallRing {
 public:
  SmallRing(const Poset& poset, std::uint32_t p, Ring ring);

  std::uint32_t prime() const noexcept { return p_; }
  Ring ring() const noexcept { return ring_; }
  const Poset& poset() const noexcept { return poset_; }
  std::size_t fi_dim() const noexcept { return pairs_.size(); }
  std::size_t dim() const noexcept { return ring_ == Ring::D ? 2 * pairs_.size() : pairs_.size(); }
  const std::vector<std::pair<Element, Element>>& pairs() const noexcept { return pairs_; }
  std::size_t pair_index(Element x, Element y) const;

  Elem zero() const { return Elem(dim(), 0); }
  Elem one() const;
  Elem basis(std::size_t k) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(const Elem& a, std::uint32_t s) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_unit(const Elem& a) const;
  Elem inverse(const Elem& a) const;

  /// Ring size p^dim, saturated at UINT64_MAX.
  std::uint64_t size() const;
  std::uint64_t unit_count() const;

  /// Calls fn on every element (or every unit) in odometer order.
  void for_each(const std::function<void(const Elem&)>& fn, bool units_only, std::uint64_t limit) const;

  RawMap map_matrix(const std::function<Elem(const Elem&)>& fn) const;
  Elem apply(const RawMap& m, const Elem& a) const;
  RawMap compose(const RawMap& a, const RawMap& b) const;
  RawMap identity_map() const;

  std::uint32_t inv(std::uint32_t a) const;

 private:
  Poset poset_;
  std::uint32_t p_;
  Ring ring_;
  std::vector<std::pair<Element, Element>> pairs_;
  std::vector<std::size_t> index_;
  // (xy, xz, zy) for every x <= z <= y
  std::vector<std::array<std::size_t, 3>> terms_;

  Elem fi_mul(const std::uint32_t* a, const std::uint32_t* b) const;
};

struct Conjugator {
  RawMap g;
  RawMap g_inv;
};

/// x -> g x g^{-1} for every unit g.
Conjugator inner_conjugator(const SmallRing& r, const Elem& unit);

/// RawMap of a library matrix over F_p.
RawMap from_matrix(const Matrix& m);

std::vector<Elem> enumerate_units(const Poset& p, std::uint32_t prime, Ring ring, std::uint64_t limit = kDefaultLimit);

/// Order-reversing involutions of the poset by permutation search.
std::vector<std::vector<Element>> brute_involutions(const Poset& p);
/// Existence of an order-reversing bijection X -> Y by permutation search.
bool brute_anti_isomorphic(const Poset& x, const Poset& y);

/// ρ̃_λ ∘ (kδ)~ on D(X,F_p): [f; i] -> [ρ_λ f; k ρ_λ i].
Elem phi0(const SmallRing& r, const std::vector<Element>& lambda, std::uint32_t k, const Elem& a);

/// All maps Ψ_θ ∘ ρ̃_λ ∘ (kδ)~ squaring to the identity, sorted and deduplicated.
std::vector<RawMap> enumerate_involutions_D(const Poset& p, std::uint32_t prime, std::uint64_t limit = kDefaultLimit);

/// All K-linear anti-automorphisms of D of order <= 2 found by backtracking
/// over images of the generators [e_x;0], [e_xy;0] (x covered by y) and [0;δ].
/// Makes no use of the factored form. Sorted.
std::vector<RawMap> raw_involutions_D(const Poset& p, std::uint32_t prime, std::uint64_t limit = kDefaultLimit);

/// Every element commuting with the whole ring.
std::vector<Elem> commutant(const Poset& p, std::uint32_t prime, Ring ring, std::uint64_t limit = kDefaultLimit);

struct Partition {
  std::vector<std::size_t> block;  // block id per item, ids are 0.. in order of first occurrence
  std::size_t count = 0;
};

/// Classes of items under M -> G M G^{-1}. Images outside the item list
/// are ignored.
Partition orbit_partition(const SmallRing& r, const std::vector<RawMap>& items, const std::vector<Conjugator>& conjugators);

/// Units [g;0] with g = δ except a primitive root at one diagonal, [δ + e_xy; 0]
/// for x < y, and [δ; e_xy] for all x <= y.
std::vector<Elem> unit_generators(const SmallRing& r);
/// Order of the subgroup generated by gens, by closure.
std::uint64_t generated_group_order(const SmallRing& r, const std::vector<Elem>& gens, std::uint64_t limit = kDefaultLimit);

/// Number of units θ of D with (ρ̃_λ ∘ (kδ)~)(θ) = -θ.
std::uint64_t count_antisymmetric_units(const Poset& p, std::uint32_t prime, const std::vector<Element>& lambda,
                                        int k, std::uint64_t limit = kDefaultLimit);

}  // namespace incalg::oracle

#endif
