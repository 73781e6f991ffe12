#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cyclo {

/// Height of a prime in a subgroup presentation: a nonnegative exponent cap,
/// or unbounded.
struct Height {
  bool infinite = false;
  int64_t cap = 0;  // ignored when infinite

  friend bool operator==(const Height&, const Height&) = default;
};

/// An ordered subgroup of (Q, Q+) in scale-and-heights form: the group of all
/// scale * p/q where every prime power dividing q stays within its height.
/// Primes without an entry have height zero.
class Subgroup {
 public:
  Subgroup() : scale_(1) {}
  Subgroup(Rat scale, std::map<int64_t, Height> heights);

  const Rat& scale() const { return scale_; }
  const std::map<int64_t, Height>& heights() const { return heights_; }

  bool contains(const Rat& q) const;

  /// Deterministic finite sample: multiples of the scale divided by tracked
  /// prime powers, closed under negation, denominators capped by the bound.
  std::vector<Rat> sample_elements(int64_t bound) const;

  /// Parses "2:inf,3:1" (empty string means no tracked primes).
  static std::map<int64_t, Height> parse_heights(const std::string& text);

  std::string heights_str() const;

 private:
  Rat scale_;
  std::map<int64_t, Height> heights_;
};

/// Common generator below two positive members: z in H with x = n*z and
/// y = m*z, built from the Bezout construction on reduced denominators.
struct CommonGenerator {
  Rat z;
  int64_t n = 0;
  int64_t m = 0;
};
CommonGenerator common_generator(const Subgroup& h, const Rat& x, const Rat& y);

/// An order-preserving injective map between subgroups of Q, i.e.
/// multiplication by a strictly positive fraction landing inside the target.
struct QHom {
  Rat ratio;
};
QHom validate_hom(const Subgroup& src, const Subgroup& dst, const Rat& ratio);

/// Least N >= 1 with x <= N*y, for positive members x, y.
int64_t archimedean_witness(const Subgroup& h, const Rat& x, const Rat& y);

}  // namespace cyclo
