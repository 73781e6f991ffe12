#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace cyclo {

/// The oriented groupoid X_n: objects are the residues 0..n-1, arrows are
/// integer displacements of the generating cyclic shift. An arrow is written
/// `disp@src`; its codomain is (src + disp) mod n and is never stored.
struct Groupoid {
  int64_t n = 1;

  friend bool operator==(const Groupoid&, const Groupoid&) = default;
};

Groupoid make_groupoid(int64_t n);

struct Arrow {
  int64_t n = 1;  // ambient model
  int64_t src = 0;
  int64_t disp = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Positivity P, non-triviality T and the cycle predicate on one arrow.
struct ArrowClass {
  bool is_identity = false;
  bool is_positive = false;  // P
  bool is_endo = false;      // dom = cod
  bool is_nontrivial = false;  // T
  bool is_cycle = false;     // equals C_dom, i.e. disp = n
};

int64_t floor_mod(int64_t a, int64_t m);

Arrow make_arrow(const Groupoid& g, int64_t src, int64_t disp);
Arrow identity_arrow(const Groupoid& g, int64_t obj);
/// The elementary cycle C_a = n@a, the generator of End(a).
Arrow cycle_of(const Groupoid& g, int64_t obj);

int64_t cod(const Arrow& f);

/// compose(g, f) applies f first; requires cod(f) = dom(g).
Arrow compose(const Arrow& g, const Arrow& f);
Arrow inverse(const Arrow& f);
Arrow power(const Arrow& f, int64_t k);
ArrowClass classify(const Arrow& f);

/// All arrows with |disp| <= bound, src ascending then disp ascending.
std::vector<Arrow> enumerate_arrows(const Groupoid& g, int64_t bound);

/// One transitive component of a permutation action: the relabeled model
/// plus the orbit walk (walk[i] is the original point renamed to object i).
struct OrbitModel {
  Groupoid model;
  std::vector<int64_t> walk;
};

/// Decomposes a permutation (given as an image list) into the groupoids of
/// its orbits. With require_transitive set, a permutation with more than one
/// orbit is rejected.
std::vector<OrbitModel> from_permutation(const std::vector<int64_t>& perm, bool require_transitive);

std::string to_string(const Arrow& f);

}  // namespace cyclo
