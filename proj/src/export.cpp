#include "export.hpp"

#include <sstream>

namespace cyclo {

std::string export_dot(const Groupoid& g, const std::vector<Loop>& highlights) {
  static const char* kColors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};
  std::ostringstream out;
  out << "digraph X" << g.n << " {\n";
  out << "  rankdir=LR;\n";
  for (int64_t i = 0; i < g.n; ++i) out << "  x" << i << ";\n";
  for (int64_t i = 0; i < g.n; ++i)
    out << "  x" << i << " -> x" << floor_mod(i + 1, g.n) << " [label=\"xi" << (i + 1)
        << "\"];\n";
  for (size_t h = 0; h < highlights.size(); ++h) {
    const char* color = kColors[h % (sizeof(kColors) / sizeof(kColors[0]))];
    for (const Arrow& f : highlights[h])
      out << "  x" << f.src << " -> x" << cod(f) << " [label=\"" << to_string(f)
          << "\", color=" << color << ", fontcolor=" << color << ", constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclo
