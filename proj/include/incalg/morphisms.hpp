#ifndef INCALG_MORPHISMS_HPP
#define INCALG_MORPHISMS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "incalg/fia.hpp"

namespace incalg {

/// K-linear map on FI(X,K) as a matrix over the interval basis.
using LinearEndo = Matrix;

LinearEndo endo_matrix(const ContextPtr& ctx, const std::function<IncFn(const IncFn&)>& map);
IncFn apply_endo(const ContextPtr& ctx, const LinearEndo& m, const IncFn& f);

/// Induced map of a poset (anti-)automorphism: α̂(e_xy) = e_{α(x)α(y)},
/// ρ_λ(e_xy) = e_{λ(y)λ(x)}.
IncFn apply_poset_map(const PosetMap& m, const IncFn& f);
/// Ψ_u(f) = u f u^{-1}.
IncFn conjugate(const IncFn& u, const IncFn& f);

/// Ψ_u ∘ M_σ ∘ φ̂ with φ̂ = α̂ (anti false) or ρ_λ (anti true).
struct FiaMorphism {
  IncFn u;
  IncFn sigma;  // multiplicative cocycle; sigma(x,x) = 1
  PosetMap map;
  bool anti = false;

  IncFn operator()(const IncFn& f) const;
  LinearEndo matrix() const;
};

FiaMorphism identity_morphism(const ContextPtr& ctx);
FiaMorphism inner_morphism(const IncFn& u);
FiaMorphism multiplicative_morphism(const IncFn& sigma);
FiaMorphism induced_morphism(const ContextPtr& ctx, const PosetMap& m);

/// Composite a ∘ b in factored form.
FiaMorphism compose(const FiaMorphism& a, const FiaMorphism& b);

bool is_multiplicative_cocycle(const IncFn& sigma);

/// Validates raw as a unital (anti-)automorphism and factors it.
FiaMorphism decompose(const ContextPtr& ctx, const LinearEndo& raw, bool anti);

/// η with σ(x,y) = η(x)/η(y) on every comparable pair, or nullopt.
std::optional<Vector> multiplicative_is_inner(const IncFn& sigma);

struct MultInnReport {
  bool holds = false;
  /// Diagonal of the Smith form of the cocycle relations restricted to the
  /// pairs outside a spanning forest; zeros mark free summands.
  std::vector<mpz_class> invariant_factors;
  /// A cocycle that is not a coboundary, when holds is false.
  std::optional<IncFn> counterexample;
};

MultInnReport analyze_mult_inn(const ContextPtr& ctx);
bool mult_subset_inn(const ContextPtr& ctx);

}  // namespace incalg

#endif
