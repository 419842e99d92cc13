#ifndef INCALG_IDEALIZATION_HPP
#define INCALG_IDEALIZATION_HPP

#include <functional>
#include <optional>
#include <random>

#include "incalg/derivations.hpp"

namespace incalg {

/// [f; i] in D(X,K) = FI(X,K) (+) I(X,K).
struct DElem {
  IncFn f;
  IncFn i;

  static DElem zero(const ContextPtr& ctx);
  static DElem one(const ContextPtr& ctx);
  /// The central element c_{k1,k2} = [k1 δ; k2 δ].
  static DElem central(const ContextPtr& ctx, const Scalar& k1, const Scalar& k2);
  static DElem random(const ContextPtr& ctx, std::mt19937_64& rng);
  static DElem random_unit(const ContextPtr& ctx, std::mt19937_64& rng);

  const ContextPtr& context() const noexcept { return f.context(); }

  DElem operator*(const DElem& o) const;
  DElem operator+(const DElem& o) const;
  DElem operator-(const DElem& o) const;
  DElem operator-() const;
  DElem scaled(const Scalar& k) const;

  bool is_unit() const { return f.is_unit(); }
  DElem inverse() const;

  friend bool operator==(const DElem& a, const DElem& b) { return a.f == b.f && a.i == b.i; }
  friend bool operator!=(const DElem& a, const DElem& b) { return !(a == b); }
};

inline DElem d_mul(const DElem& a, const DElem& b) { return a * b; }
inline DElem d_inverse(const DElem& a) { return a.inverse(); }

/// Center of D(X,K): [e_C; 0] and [0; e_C] for each component indicator e_C.
std::vector<DElem> d_center_basis(const ContextPtr& ctx);

/// A K-linear map on D(X,K) as a 2d x 2d matrix; basis [e_k;0] then [0;e_k].
using DMorphism = Matrix;

Vector d_vector(const DElem& a);
DElem d_from_vector(const ContextPtr& ctx, const Vector& v);
DMorphism d_endo_matrix(const ContextPtr& ctx, const std::function<DElem(const DElem&)>& map);
DElem d_apply(const DMorphism& m, const DElem& a);

/// Block assembly [[a, b], [c, d]] of FI-sized blocks.
DMorphism d_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Extension of a ring (anti-)automorphism of FI to I; for finite X this is
/// the map itself.
LinearEndo extend(const FiaMorphism& phi);

/// η̃ = diag(η, η̄).
DMorphism lift_auto(const FiaMorphism& eta);
/// ρ̃ = diag(ρ, ρ̄) for an anti-automorphism ρ.
DMorphism lift_anti(const FiaMorphism& rho);
/// g̃ = diag(id, g·); g must be a central unit.
DMorphism lift_g(const IncFn& g);
/// (kδ)~.
DMorphism lift_k(const ContextPtr& ctx, const Scalar& k);
/// D̃ = [[id, 0], [D, id]].
DMorphism lift_der(const DerivationSpec& d);

/// Ψ_θ assembled as Ψ̃_f ∘ D̃_{-f^{-1} j} for θ = [f; j].
DMorphism inner_auto_D(const DElem& theta);
/// Ψ_θ computed by direct conjugation, for cross-checks.
DMorphism conjugation_matrix(const DElem& theta);

struct AntiIsomorphism {
  PosetMap lambda;       // X -> Y
  ContextPtr from, to;
  DMorphism upsilon;     // 2 dim(Y) x 2 dim(X)

  DElem operator()(const DElem& a) const;
};

/// A poset anti-isomorphism X -> Y and the induced ring anti-isomorphism
/// [f; i] -> [ρ_λ f; ρ_λ i], or nullopt when X and Y are not anti-isomorphic.
std::optional<AntiIsomorphism> d_anti_isomorphic(const Poset& x, const Poset& y, const Field& field);

/// ρ_λ(f)(x,y) = f(λ^{-1} y, λ^{-1} x) for an anti-isomorphism λ between
/// possibly different posets.
IncFn transfer_anti(const PosetMap& lambda, const IncFn& f, const ContextPtr& to);

}  // namespace incalg

#endif
