#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ast.hpp"
#include "structure.hpp"

namespace cyclo::logic {

enum class VerdictKind : uint8_t { holds, holds_up_to_bound, fails, unknown_at_bound };

const char* verdict_name(VerdictKind k);

/// Outcome of checking one sequent. `fails` always carries a valuation that
/// re-evaluates to antecedent-true, consequent-false. `holds` is reserved for
/// sequents whose context ranges over exhaustively enumerated sorts.
struct Verdict {
  VerdictKind kind = VerdictKind::holds_up_to_bound;
  std::string label;
  std::string sequent_text;
  std::vector<std::pair<std::string, Value>> counterexample;
  uint64_t instances = 0;
};

/// Merge order for combining verdicts: fails dominates, then
/// unknown-at-bound, then holds-up-to-bound, then holds.
VerdictKind merge_verdicts(VerdictKind a, VerdictKind b);

/// Bounded satisfaction check: universally quantifies the context over the
/// bounded domains, evaluating the consequent on every antecedent-satisfying
/// instance. Rotation symmetry of the structure cuts the first context
/// variable to orbit representatives; every reported truth is definitive.
Verdict check(const Structure& st, const Sequent& s, const Bounds& bounds);

/// Re-evaluates a valuation of the context: true when the antecedent holds
/// there and the consequent is definitively false.
bool reverify(const Structure& st, const Sequent& s, const Bounds& bounds,
              const std::vector<std::pair<std::string, Value>>& valuation);

}  // namespace cyclo::logic
