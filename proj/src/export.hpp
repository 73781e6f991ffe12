#pragma once

#include <string>
#include <vector>

#include "groupoid.hpp"
#include "loops.hpp"

namespace cyclo {

/// DOT digraph of X_n: one node per object, one edge per generator, plus one
/// colored edge chain per highlighted loop. Byte-stable across runs.
std::string export_dot(const Groupoid& g, const std::vector<Loop>& highlights = {});

}  // namespace cyclo
