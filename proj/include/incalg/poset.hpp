#ifndef INCALG_POSET_HPP
#define INCALG_POSET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incalg/error.hpp"

namespace incalg {

// Symmetry searches backtrack over all bijections; beyond this size they are
// refused with SizeLimit.
inline constexpr std::size_t kMaxSearchElements = 12;

using Element = std::size_t;

/// A finite poset on a fixed, user-ordered list of labels. The order of the
/// labels is the canonical basis order used by every matrix downstream.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of the given relations (which
  /// need not be covers) and reduces them to the Hasse diagram.
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& relations);
  /// Same, with relations given by element index.
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<Element, Element>>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  Element index(std::string_view label) const;  // throws UnknownLabel

  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// Hasse edges (x, y) with x covered by y.
  const std::vector<std::pair<Element, Element>>& covers() const noexcept { return covers_; }

  bool is_connected() const;
  /// Connected components of the comparability graph, each sorted, ordered by
  /// their least element.
  std::vector<std::vector<Element>> components() const;
  /// Elements comparable with every element of the poset.
  std::vector<Element> all_comparable_elements() const;

  /// The same labels with the order reversed.
  Poset dual() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<std::pair<Element, Element>> covers_;
};

enum class MapKind { Automorphism, AntiAutomorphism };

/// A bijection of a poset (or between two posets) that preserves or reverses
/// the order.
struct PosetMap {
  std::vector<Element> image;
  MapKind kind = MapKind::Automorphism;

  Element operator()(Element x) const { return image[x]; }
  std::size_t size() const noexcept { return image.size(); }
  bool is_identity() const;
  bool is_involution() const;
  PosetMap inverse() const;

  friend bool operator==(const PosetMap& a, const PosetMap& b) {
    return a.image == b.image && a.kind == b.kind;
  }
};

/// a ∘ b. Two anti maps compose to an automorphism.
PosetMap compose(const PosetMap& a, const PosetMap& b);

PosetMap identity_map(const Poset& p);

/// Checks the defining order condition for image as a map X -> Y.
bool preserves_order(const Poset& x, const Poset& y, const std::vector<Element>& image, MapKind kind);

/// Validates and wraps a candidate map on P; throws InvalidArgument if the
/// order condition fails.
PosetMap make_poset_map(const Poset& p, std::vector<Element> image, MapKind kind);

/// All (anti-)isomorphisms X -> Y, in lexicographic order of images.
/// A limit of 0 means no limit.
std::vector<PosetMap> isomorphisms(const Poset& x, const Poset& y, MapKind kind, std::size_t limit = 0);

std::vector<PosetMap> automorphisms(const Poset& p);
std::vector<PosetMap> anti_automorphisms(const Poset& p);
/// Anti-automorphisms of order 2.
std::vector<PosetMap> involutions(const Poset& p);

/// Position of an element in the λ-decomposition.
enum class Part { X1, X2, X3 };

/// Partition (X1, X2, X3) with X3 = Fix(λ), λ(X1) = X2, X1 down-closed and
/// X2 up-closed.
struct LambdaDecomposition {
  std::vector<Part> part;  // per element
  std::vector<Element> x1, x2, x3;

  Part operator[](Element x) const { return part[x]; }
};

/// First valid decomposition in canonical backtracking order: λ-orbits are
/// taken by least element, and that element is tried in X1 before X2.
LambdaDecomposition lambda_decomposition(const Poset& p, const PosetMap& lambda);

/// Checks the defining conditions of a λ-decomposition.
bool is_lambda_decomposition(const Poset& p, const PosetMap& lambda, const LambdaDecomposition& d);

/// Conjugacy of two involutions under Aut(P): α with α∘λ = μ∘α.
std::optional<PosetMap> conjugating_automorphism(const Poset& p, const PosetMap& lambda, const PosetMap& mu);

}  // namespace incalg

#endif
