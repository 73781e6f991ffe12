#pragma once

#include "ast.hpp"

namespace cyclo::logic {

/// Expands a macro atom over its argument terms into a plain formula.
/// Gen expansions are finite disjunctions over block shapes with the
/// windings as bounded indexed disjunctions; oversized instances are
/// rejected rather than materialized.
FormulaPtr expand_macro(const MacroApp& app);

/// Expands a named macro over canonical fresh variables:
///   L/Phi/Psi {n}; PMin {}; Gen {k, n} or {k, n, m}; DomEq {k', count}.
/// Returns the formula together with its free variable context.
struct NamedExpansion {
  std::vector<std::pair<std::string, Sort>> context;
  FormulaPtr formula;
};
NamedExpansion expand_macro_named(const std::string& name, const std::vector<int64_t>& params);

/// The composite term l_i: args[i-1+n-1] o ... o args[i-1], 1-based i,
/// indices cyclic.
TermPtr loop_composite_term(const std::vector<TermPtr>& args, int64_t i);

}  // namespace cyclo::logic
