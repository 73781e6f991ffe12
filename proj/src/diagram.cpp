#include "diagram.hpp"

#include <algorithm>

namespace cyclo {

Diagram::Diagram(int64_t objects, std::vector<Edge> edges)
    : objects_(objects), edges_(std::move(edges)) {
  require(objects_ >= 1, Errc::invalid_argument, "diagram needs at least one object");
  for (const Edge& e : edges_) {
    require(e.from >= 0 && e.from < objects_ && e.to >= 0 && e.to < objects_,
            Errc::invalid_argument, "edge endpoint out of range");
    require(e.label >= 1, Errc::invalid_argument, "labels are positive integers");
  }
  for (int64_t i = 0; i < objects_; ++i) {
    const Edge id{i, i, 1};
    if (std::find(edges_.begin(), edges_.end(), id) == edges_.end()) edges_.push_back(id);
  }
}

Diagram Diagram::parse(const std::string& text) {
  const std::string prefix = "chain:";
  require(text.rfind(prefix, 0) == 0, Errc::parse_error,
          "expected chain:<label,label,...>");
  std::vector<int64_t> labels;
  size_t pos = prefix.size();
  while (pos < text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    try {
      labels.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad chain label '" + item + "'");
    }
  }
  require(!labels.empty(), Errc::parse_error, "empty chain");
  const int64_t n = static_cast<int64_t>(labels.size()) + 1;
  std::vector<Edge> edges;
  // composite closure: one edge i -> j for every i < j
  for (int64_t i = 0; i < n; ++i) {
    int64_t acc = 1;
    for (int64_t j = i + 1; j < n; ++j) {
      acc *= labels[static_cast<size_t>(j - 1)];
      edges.push_back(Edge{i, j, acc});
    }
  }
  return Diagram(n, std::move(edges));
}

std::vector<Rat> colimit_cocone(const Diagram& d) {
  const int64_t root = 0;
  std::vector<Rat> lambda(static_cast<size_t>(d.objects()), Rat(0));
  for (int64_t j = 0; j < d.objects(); ++j) {
    bool assigned = false;
    // every joint upper bound of (root, j) must give the same value
    for (const Diagram::Edge& f : d.edges()) {
      if (f.from != root) continue;
      for (const Diagram::Edge& g : d.edges()) {
        if (g.from != j || g.to != f.to) continue;
        const Rat v = Rat(g.label) / Rat(f.label);
        if (assigned)
          require(v == lambda[static_cast<size_t>(j)], Errc::inconsistent_diagram,
                  "joint bounds disagree at object " + std::to_string(j));
        lambda[static_cast<size_t>(j)] = v;
        assigned = true;
      }
    }
    require(assigned, Errc::no_joint_bound,
            "no declared joint upper bound for the root and object " + std::to_string(j));
  }
  for (const Diagram::Edge& e : d.edges())
    require(lambda[static_cast<size_t>(e.from)] ==
                Rat(e.label) * lambda[static_cast<size_t>(e.to)],
            Errc::inconsistent_diagram,
            "cocone does not commute along " + std::to_string(e.from) + " -> " +
                std::to_string(e.to));
  return lambda;
}

}  // namespace cyclo
