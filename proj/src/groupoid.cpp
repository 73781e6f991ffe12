#include "groupoid.hpp"

#include <algorithm>

namespace cyclo {

int64_t floor_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Groupoid make_groupoid(int64_t n) {
  require(n >= 1, Errc::invalid_argument, "model size must be >= 1, got " + std::to_string(n));
  return Groupoid{n};
}

Arrow make_arrow(const Groupoid& g, int64_t src, int64_t disp) {
  require(src >= 0 && src < g.n, Errc::invalid_argument,
          "source " + std::to_string(src) + " out of range for X_" + std::to_string(g.n));
  return Arrow{g.n, src, disp};
}

Arrow identity_arrow(const Groupoid& g, int64_t obj) { return make_arrow(g, obj, 0); }

Arrow cycle_of(const Groupoid& g, int64_t obj) { return make_arrow(g, obj, g.n); }

int64_t cod(const Arrow& f) { return floor_mod(f.src + f.disp, f.n); }

Arrow compose(const Arrow& g, const Arrow& f) {
  require(g.n == f.n, Errc::model_mismatch, "compose across different models");
  require(cod(f) == g.src, Errc::non_composable,
          "cod " + std::to_string(cod(f)) + " of first arrow does not match dom " +
              std::to_string(g.src) + " of second");
  return Arrow{f.n, f.src, f.disp + g.disp};
}

Arrow inverse(const Arrow& f) { return Arrow{f.n, cod(f), -f.disp}; }

Arrow power(const Arrow& f, int64_t k) {
  require(cod(f) == f.src, Errc::non_composable, "power of a non-endomorphism");
  return Arrow{f.n, f.src, f.disp * k};
}

ArrowClass classify(const Arrow& f) {
  ArrowClass c;
  c.is_identity = f.disp == 0;
  c.is_positive = f.disp >= 0;
  c.is_endo = cod(f) == f.src;
  c.is_nontrivial = c.is_endo && f.disp != 0;
  c.is_cycle = f.disp == f.n;
  return c;
}

std::vector<Arrow> enumerate_arrows(const Groupoid& g, int64_t bound) {
  require(bound >= 0, Errc::invalid_argument, "negative arrow bound");
  std::vector<Arrow> out;
  out.reserve(static_cast<size_t>(g.n * (2 * bound + 1)));
  for (int64_t src = 0; src < g.n; ++src)
    for (int64_t d = -bound; d <= bound; ++d) out.push_back(Arrow{g.n, src, d});
  return out;
}

std::vector<OrbitModel> from_permutation(const std::vector<int64_t>& perm, bool require_transitive) {
  const int64_t size = static_cast<int64_t>(perm.size());
  require(size >= 1, Errc::invalid_argument, "empty permutation");
  std::vector<char> seen(perm.size(), 0);
  for (int64_t v : perm) {
    require(v >= 0 && v < size && !seen[static_cast<size_t>(v)], Errc::not_a_bijection,
            "image list is not a bijection on 0.." + std::to_string(size - 1));
    seen[static_cast<size_t>(v)] = 1;
  }

  std::fill(seen.begin(), seen.end(), 0);
  std::vector<OrbitModel> orbits;
  for (int64_t start = 0; start < size; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    OrbitModel orbit;
    int64_t v = start;
    while (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      orbit.walk.push_back(v);
      v = perm[static_cast<size_t>(v)];
    }
    orbit.model = Groupoid{static_cast<int64_t>(orbit.walk.size())};
    orbits.push_back(std::move(orbit));
  }
  if (require_transitive && orbits.size() != 1)
    fail(Errc::not_transitive,
         "permutation has " + std::to_string(orbits.size()) + " orbits, expected a single cycle");
  return orbits;
}

std::string to_string(const Arrow& f) {
  return std::to_string(f.disp) + "@" + std::to_string(f.src);
}

}  // namespace cyclo
