#ifndef INCALG_INVOLUTIONS_HPP
#define INCALG_INVOLUTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "incalg/idealization.hpp"

namespace incalg {

/// Φ = Ψ_θ ∘ ρ̃_λ ∘ (kδ)~, validated to square to the identity.
class InvolutionSpec {
 public:
  const DElem& theta() const noexcept { return theta_; }
  const PosetMap& lambda() const noexcept { return lambda_; }
  const Scalar& k() const noexcept { return k_; }
  const ContextPtr& context() const noexcept { return theta_.context(); }

  int sign() const { return k_.is_one() ? 1 : -1; }
  const PosetMap& induced() const noexcept { return lambda_; }

  DElem operator()(const DElem& a) const;
  DMorphism matrix() const;
  /// ρ̃_λ ∘ (kδ)~ without the inner factor.
  DElem phi0(const DElem& a) const;

 private:
  friend InvolutionSpec build(const DElem& theta, const PosetMap& lambda, const Scalar& k);
  InvolutionSpec(DElem theta, PosetMap lambda, Scalar k)
      : theta_(std::move(theta)), theta_inv_(theta_.inverse()), lambda_(std::move(lambda)), k_(std::move(k)) {}

  DElem theta_;
  DElem theta_inv_;
  PosetMap lambda_;
  Scalar k_;
};

/// Rejects char 2, disconnected X, k not ±1, non-units, and any Φ with Φ² ≠ id.
InvolutionSpec build(const DElem& theta, const PosetMap& lambda, const Scalar& k);
InvolutionSpec build(const DElem& theta, const PosetMap& lambda, int k);

struct HypothesisReport {
  MultInnReport mult;
  DerIderReport der;
  bool holds() const { return mult.holds && der.holds; }
};

HypothesisReport check_hypotheses(const ContextPtr& ctx);
/// Throws Char2Unsupported, NotConnected or HypothesisFailed.
void require_classifiable(const ContextPtr& ctx);

/// Factors a raw involution of D(X,K) given as a 2d x 2d block matrix.
InvolutionSpec recognize(const ContextPtr& ctx, const DMorphism& raw);

/// θ_ε = [u_ε; 0], u_ε = 1 on X1 ∪ X2 and ε on X3 (X3 in canonical order).
InvolutionSpec rho_eps(const ContextPtr& ctx, const PosetMap& lambda, const Vector& eps, int k = 1);
/// ω = [w; 0], w = 1 on X1 and -1 on X2; requires X3 = ∅.
InvolutionSpec sigma_lambda(const ContextPtr& ctx, const PosetMap& lambda, int k = 1);

/// γ with θ = γ · base(γ), for base of the form Ψ_{[u;0]} ∘ ρ̃_λ ∘ (kδ)~ with
/// u diagonal (ρ̃_ε or σ̃_λ).
DElem symmetric_decompose(const DElem& theta, const InvolutionSpec& base);

/// Equivalence witness φ = Ψ_θ ∘ α̃ ∘ (kδ)~, an automorphism of D(X,K).
struct DWitness {
  DElem theta;
  PosetMap alpha;
  Scalar k;

  DMorphism matrix() const;
};

struct Verdict {
  bool equivalent = false;
  std::optional<DWitness> witness;
  std::string distinguisher;  // "sign", "lambda" or "chi" when not equivalent
  std::string detail;
};

/// Decides equivalence via inner automorphisms; witnesses are re-verified.
Verdict equivalent_inner(const InvolutionSpec& phi1, const InvolutionSpec& phi2);
/// Decides equivalence via arbitrary automorphisms of D(X,K).
Verdict equivalent(const InvolutionSpec& phi1, const InvolutionSpec& phi2);

/// Checks φ ∘ Φ1 = Φ2 ∘ φ exactly.
bool verify_witness(const DWitness& w, const InvolutionSpec& phi1, const InvolutionSpec& phi2);

struct ClassInvariant {
  PosetMap lambda;
  int sign = 1;
  ClassTuple chi;    // normalized; empty when X3 = ∅
  std::string type;  // "rho" or "sigma" when X3 = ∅
};

ClassInvariant invariant(const InvolutionSpec& phi);

/// Φ = Ψ_γ ∘ B ∘ Ψ_γ^{-1} with B one of ρ̃_ε∘(kδ)~, σ̃_λ∘(kδ)~.
struct Reduction {
  DElem gamma;
  InvolutionSpec base;
  ClassTuple chi;
  std::string type;
};

Reduction reduce(const InvolutionSpec& phi);

struct Classification {
  PosetMap lambda;
  std::vector<InvolutionSpec> representatives;
  std::optional<std::uint64_t> count;  // nullopt for Q with |X3| >= 2
  std::string schema;                  // description of the family when infinite
  bool general = false;
};

/// Inner (or, with general, Aut(X)-folded) classes of involutions with
/// induced map λ.
Classification classify(const ContextPtr& ctx, const PosetMap& lambda, bool general = false);
/// 2|S_K|^{|X3|-1} (4 when X3 = ∅); throws InfiniteClassCount for Q.
std::uint64_t inner_class_count(const ContextPtr& ctx, const PosetMap& lambda);

}  // namespace incalg

#endif
