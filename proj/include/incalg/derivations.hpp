#ifndef INCALG_DERIVATIONS_HPP
#define INCALG_DERIVATIONS_HPP

#include <optional>
#include <random>

#include "incalg/morphisms.hpp"

namespace incalg {

/// D = D_i + L_τ with D_i(f) = f i - i f and L_τ(f) = τ ⊙ f.
struct DerivationSpec {
  IncFn i;
  IncFn tau;

  IncFn operator()(const IncFn& f) const;
  LinearEndo matrix() const;
};

DerivationSpec zero_derivation(const ContextPtr& ctx);
DerivationSpec inner_derivation(const IncFn& i);
DerivationSpec additive_derivation(const IncFn& tau);

bool is_additive_cocycle(const IncFn& tau);

/// Leibniz rule on every basis pair, then on `trials` random pairs.
bool leibniz_check(const DerivationSpec& d, std::size_t trials, std::mt19937_64& rng);
bool leibniz_check(const ContextPtr& ctx, const LinearEndo& raw, std::size_t trials, std::mt19937_64& rng);

/// Diagonal f with τ(x,y) = f(y,y) - f(x,x), or nullopt. With an anchor x0
/// comparable to everything, f(x,x) = -τ(x,x0) below x0 and τ(x0,x) above;
/// without one the first such element is used, else a spanning-tree solve.
std::optional<IncFn> additive_is_inner(const IncFn& tau, std::optional<Element> anchor = std::nullopt);

struct DerIderReport {
  bool holds = false;
  std::size_t rank = 0;      // rank of the cocycle relations on non-tree pairs
  std::size_t unknowns = 0;  // number of non-tree pairs
  std::optional<IncFn> counterexample;  // additive cocycle that is not inner
};

DerIderReport analyze_der_ider(const ContextPtr& ctx);
bool der_equals_ider(const ContextPtr& ctx);

/// Splits a raw derivation FI -> I into inner and additive parts. The inner
/// part is normalized to vanish at the first diagonal entry of each component.
DerivationSpec split_raw_derivation(const ContextPtr& ctx, const LinearEndo& raw);

}  // namespace incalg

#endif
