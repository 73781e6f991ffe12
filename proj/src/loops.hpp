#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "groupoid.hpp"

namespace cyclo {

/// A composable cycle of arrows over one model: cod(arrows[t]) = dom(arrows[t+1])
/// and cod(last) = dom(first).
using Loop = std::vector<Arrow>;

struct LoopClass {
  bool is_loop = false;
  bool is_positive = false;  // every arrow positive
  bool is_phi = false;       // positive non-trivial loop
  bool is_psi = false;       // elementary cycle: composite equals C_dom(first)
  int64_t length = 0;
  int64_t total_disp = 0;
};

/// Canonical splitting disp = c + b*n with 0 <= c < n.
struct Factorization {
  int64_t base_path_length = 0;  // c
  int64_t winding = 0;           // b
};

/// One generated arrow as a successive block of a generating loop z:
/// the arrow equals (z_{start+len-1} o ... o z_start) o l_start(z)^winding.
/// Positions are 1-based into z and wrap modulo its length.
struct WitnessBlock {
  int64_t start = 1;
  int64_t len = 0;
  int64_t winding = 0;

  friend bool operator==(const WitnessBlock&, const WitnessBlock&) = default;
};

/// Certificate that a loop z generates one or two target loops successively.
/// The first target starts at z_1; the second is aligned by cyclically
/// rotating it `rotation` steps before decomposing.
struct GenWitness {
  std::vector<WitnessBlock> blocks;         // first target
  std::vector<WitnessBlock> second_blocks;  // second target (ternary form)
  int64_t rotation = 0;
  bool ternary = false;

  friend bool operator==(const GenWitness&, const GenWitness&) = default;
};

enum class GenMode { epicyclic, cyclic };

LoopClass classify_loop(const Loop& arrows);

/// The composite l_i: the full loop based at dom(arrows[i-1]); i is 1-based.
Arrow loop_composite(const Loop& x, int64_t i);

Factorization factorize_arrow(const Arrow& f);

/// The minimal positive arrow a -> b; the identity when a = b.
Arrow pmin(const Groupoid& g, int64_t a, int64_t b);

/// Unique splitting of a positive arrow as alpha o C_dom^winding with alpha
/// the minimal positive arrow between its endpoints.
struct CycleFactor {
  Arrow alpha;
  int64_t winding = 0;
};
CycleFactor factor_through_cycle(const Arrow& f);

/// Decomposes the targets as successive blocks of z. In epicyclic mode z must
/// be a positive non-trivial loop, in cyclic mode an elementary cycle; the
/// first target must be based at dom(z_1). Throws no_witness if no
/// decomposition exists. max_winding, when nonnegative, caps the windings
/// (used by bounded search).
GenWitness decompose_against(const Loop& z, const Loop& x, const std::optional<Loop>& y,
                             GenMode mode, int64_t max_winding = -1);

/// Re-applies a witness to z, reproducing the generated loops.
Loop apply_witness(const Loop& z, const std::vector<WitnessBlock>& blocks);

/// Exact decision for successive generation: true when z is a positive
/// non-trivial loop, the first target starts at dom(z_1), and every target
/// decomposes into successive blocks of z (the second after some rotation,
/// starting anywhere). Windings are unbounded: the block arithmetic
/// determines them, so the answer is exact.
bool generates(const Loop& z, const Loop& x, const std::optional<Loop>& y);

/// The minimal generating loop for the pair (x, y): its domains are pairwise
/// distinct, it is based at dom(x_1), and its length is the number of
/// distinct objects among the targets' domains.
struct MinimalGenerator {
  Loop z;
  GenWitness witness;
};
MinimalGenerator minimal_generator(const Loop& x, const Loop& y, GenMode mode);

/// Splits one arrow of an elementary cycle as beta o alpha with dom(beta) = c,
/// so the refined loop is again an elementary cycle. index is 1-based.
struct InsertSplit {
  int64_t index = 1;
  Arrow alpha;
  Arrow beta;
};
InsertSplit insert_object(const Loop& x, int64_t c);

}  // namespace cyclo
