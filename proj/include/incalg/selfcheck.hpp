#ifndef INCALG_SELFCHECK_HPP
#define INCALG_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "incalg/involutions.hpp"

namespace incalg {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  /// Unit-group bound for the exhaustive oracle cross-check.
  std::uint64_t oracle_limit = 200000;
};

/// Runs every property check that applies to D(X,K): ring axioms, center,
/// hypotheses, decomposition round-trips, and, when hypotheses hold,
/// classification, witnesses and (for small F_p) the exhaustive oracle.
std::vector<CheckResult> run_checks(const ContextPtr& ctx, const CheckOptions& opts = {});

}  // namespace incalg

#endif
