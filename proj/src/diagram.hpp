#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cyclo {

/// A finite diagram of copies of Z with multiplication-by-n arrows. Labels
/// compose multiplicatively; every pair of objects needs a declared joint
/// upper bound for the cocone construction to apply.
class Diagram {
 public:
  struct Edge {
    int64_t from = 0;
    int64_t to = 0;
    int64_t label = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Diagram(int64_t objects, std::vector<Edge> edges);

  int64_t objects() const { return objects_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// "chain:2,3" builds 0 ->2-> 1 ->3-> 2 with the composite closure added.
  static Diagram parse(const std::string& text);

 private:
  int64_t objects_ = 1;
  std::vector<Edge> edges_;  // includes identities
};

/// The cocone into Q with the first object as root: root maps by 1 and every
/// other object by the ratio of labels through a joint upper bound. Checked
/// to commute along every edge and to be independent of the bound choice.
std::vector<Rat> colimit_cocone(const Diagram& d);

}  // namespace cyclo
