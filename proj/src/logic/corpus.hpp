#pragma once

#include <string>
#include <vector>

#include "ast.hpp"

namespace cyclo::logic {

/// Signature family a theory's sequents live in.
enum class TheoryKind : uint8_t { groupoid, group };

struct Theory {
  std::string name;
  TheoryKind kind = TheoryKind::groupoid;
  std::vector<Sequent> sequents;
};

/// Built-in axiom corpora. Known names: G, Gbar, GT, GTbar, GC, GCbar, TE,
/// TE-alt, TC, O, Obar, One, Onebar, TN. Axiom schemes over loop lengths are
/// instantiated up to scheme_cap; indexed disjunctions stay symbolic.
Theory corpus(const std::string& name, int64_t scheme_cap = 4);

std::vector<std::string> corpus_names();

}  // namespace cyclo::logic
