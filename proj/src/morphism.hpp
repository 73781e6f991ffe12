#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupoid.hpp"

namespace cyclo {

/// A morphism X_n -> X_m of the epicyclic category in generator-image form:
/// the generator based at object i of X_n maps to the positive arrow of
/// displacement blocks[i] based at the running image object; base is the
/// image of object 0 and degree is the winding multiplicity of the map, so
/// sum(blocks) = degree * m. Degree 1 morphisms are exactly the cyclic
/// (cycle-preserving) ones.
class Morphism {
 public:
  Morphism(int64_t src_n, int64_t dst_m, int64_t degree, int64_t base,
           std::vector<int64_t> blocks);

  int64_t src_n() const { return n_; }
  int64_t dst_m() const { return m_; }
  int64_t degree() const { return k_; }
  int64_t base() const { return base_; }
  const std::vector<int64_t>& blocks() const { return blocks_; }

  /// Image of object i (0 <= i < n).
  int64_t apply_object(int64_t i) const;
  Arrow apply(const Arrow& f) const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.k_ == b.k_ && a.base_ == b.base_ &&
           a.blocks_ == b.blocks_;
  }

  /// Monotone staircase: total displacement accumulated by walking j
  /// generator steps from object 0 (j may be any integer).
  int64_t staircase(int64_t j) const;

 private:
  int64_t n_, m_, k_, base_;
  std::vector<int64_t> blocks_;
  std::vector<int64_t> prefix_;  // prefix_[i] = blocks_[0] + ... + blocks_[i-1]
};

Morphism identity_morphism(int64_t n);

/// compose(h2, h1) applies h1 first.
Morphism compose(const Morphism& h2, const Morphism& h1);

/// The degree, characterized by sending the elementary cycle of the source
/// to the degree-th power of the elementary cycle of the target.
int64_t mod_of(const Morphism& h);

/// All morphisms X_n -> X_m of degree <= max_degree, ordered by base, then
/// blocks colexicographically, then degree.
std::vector<Morphism> enumerate_homs(int64_t n, int64_t m, int64_t max_degree);

/// (n+m-1)! / ((n-1)! (m-1)!), the number of degree-1 morphisms X_n -> X_m.
int64_t hom_count_lambda(int64_t n, int64_t m);

/// Compares the degree-1 morphisms against an independently brute-forced
/// enumeration of cycle-preserving model maps, elementwise.
struct InclusionReport {
  bool pass = false;
  int64_t degree_one_count = 0;
  int64_t cyclic_functor_count = 0;
  std::string mismatch;  // empty when pass
};
InclusionReport check_inclusion_full(int64_t n, int64_t m);

}  // namespace cyclo
