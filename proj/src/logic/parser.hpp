#pragma once

#include <string>
#include <vector>

#include "ast.hpp"

namespace cyclo::logic {

/// Parses one sequent: `v:SORT, ... | antecedent |- consequent` (the
/// antecedent defaults to true). Throws Error with a line:column position on
/// syntax, unknown-symbol or sort errors.
Sequent parse_sequent(const std::string& text);

/// Parses a corpus file: one sequent per stanza, stanzas separated by blank
/// lines, `#` comments; the last comment line before a stanza names it.
std::vector<Sequent> parse_corpus(const std::string& content);

}  // namespace cyclo::logic
