#pragma once

// Independent reference implementations used as test oracles. These verify
// the library from first principles and never call the code paths they check.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "groupoid.hpp"
#include "loops.hpp"
#include "rational.hpp"

namespace oracle {

using cyclo::Arrow;
using cyclo::Loop;
using cyclo::WitnessBlock;

inline int64_t imod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Orbits of an image-list permutation, found by plain walking.
inline std::vector<std::vector<int64_t>> perm_orbits(const std::vector<int64_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<std::vector<int64_t>> orbits;
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int64_t> orbit;
    int64_t v = static_cast<int64_t>(s);
    while (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      orbit.push_back(v);
      v = perm[static_cast<size_t>(v)];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Re-applies a witness to z by plain index walking: block b reproduces the
// arrow starting at dom(z_{b.start}) obtained by composing len generators of
// z from that position and then winding times the full loop at it.
inline Loop reapply(const Loop& z, const std::vector<WitnessBlock>& blocks) {
  const int64_t k = static_cast<int64_t>(z.size());
  int64_t full = 0;
  for (const Arrow& f : z) full += f.disp;
  Loop out;
  for (const WitnessBlock& b : blocks) {
    const int64_t p = b.start - 1;
    int64_t disp = b.winding * full;
    for (int64_t t = 0; t < b.len; ++t) disp += z[static_cast<size_t>(imod(p + t, k))].disp;
    out.push_back(Arrow{z.front().n, z[static_cast<size_t>(p)].src, disp});
  }
  return out;
}

// Counts the decompositions of `target` as successive blocks of z in normal
// form (identities take empty blocks, other arrows runs of length 1..k),
// starting from 0-based position p0, windings in [0, max_winding].
inline int64_t count_witnesses(const Loop& z, const Loop& target, int64_t p0,
                               int64_t max_winding) {
  const int64_t k = static_cast<int64_t>(z.size());
  int64_t full = 0;
  for (const Arrow& f : z) full += f.disp;
  const auto obj_at = [&](int64_t p) { return z[static_cast<size_t>(imod(p, k))].src; };
  const auto run_disp = [&](int64_t p, int64_t r) {
    int64_t d = 0;
    for (int64_t t = 0; t < r; ++t) d += z[static_cast<size_t>(imod(p + t, k))].disp;
    return d;
  };
  int64_t count = 0;
  const int64_t n = static_cast<int64_t>(target.size());
  const auto rec = [&](auto&& self, int64_t i, int64_t pos) -> void {
    if (i == n) {
      ++count;
      return;
    }
    const Arrow& t = target[static_cast<size_t>(i)];
    const int64_t r_lo = t.disp == 0 ? 0 : 1;
    const int64_t r_hi = t.disp == 0 ? 0 : k;
    for (int64_t r = r_lo; r <= r_hi; ++r) {
      if (obj_at(pos + r) != cyclo::cod(t)) continue;
      const int64_t rem = t.disp - run_disp(pos, r);
      if (rem < 0 || rem % full != 0 || rem / full > max_winding) continue;
      self(self, i + 1, pos + r);
    }
  };
  rec(rec, 0, p0);
  return count;
}

// Least N with x <= N*y by linear scan over exact rationals.
inline int64_t archimedean_scan(const cyclo::Rat& x, const cyclo::Rat& y) {
  for (int64_t n = 1;; ++n)
    if (x <= cyclo::Rat(n) * y) return n;
}

}  // namespace oracle
