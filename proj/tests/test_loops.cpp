#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "loops.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

Loop loop_of(const Groupoid& g, std::vector<std::pair<int64_t, int64_t>> arrows) {
  Loop out;
  for (auto [src, disp] : arrows) out.push_back(make_arrow(g, src, disp));
  return out;
}

// Random positive loop with total displacement a nonzero multiple of n
// (phi mode) or exactly n (psi mode).
Loop random_loop(std::mt19937_64& rng, const Groupoid& g, bool psi) {
  const int64_t n = g.n;
  while (true) {
    const int64_t len = 1 + static_cast<int64_t>(rng() % 4);
    std::vector<int64_t> disps(static_cast<size_t>(len));
    int64_t total = 0;
    for (auto& d : disps) {
      d = static_cast<int64_t>(rng() % static_cast<uint64_t>(2 * n + 1));
      total += d;
    }
    if (psi) {
      // rescale to total exactly n by a random weak composition
      std::vector<int64_t> cuts;
      for (int64_t i = 0; i < len - 1; ++i)
        cuts.push_back(static_cast<int64_t>(rng() % static_cast<uint64_t>(n + 1)));
      cuts.push_back(0);
      cuts.push_back(n);
      std::sort(cuts.begin(), cuts.end());
      for (int64_t i = 0; i < len; ++i) disps[static_cast<size_t>(i)] = cuts[static_cast<size_t>(i + 1)] - cuts[static_cast<size_t>(i)];
    } else {
      const int64_t rem = total % n;
      disps.back() += (n - rem) % n;
      total = 0;
      for (int64_t d : disps) total += d;
      if (total == 0) continue;
    }
    Loop out;
    int64_t at = static_cast<int64_t>(rng() % static_cast<uint64_t>(n));
    for (int64_t d : disps) {
      out.push_back(make_arrow(g, at, d));
      at = floor_mod(at + d, n);
    }
    return out;
  }
}

}  // namespace

TEST_CASE("loop classification") {
  const Groupoid x4 = make_groupoid(4);
  const LoopClass a = classify_loop(loop_of(x4, {{0, 2}, {2, 2}}));
  CHECK(a.is_loop);
  CHECK(a.is_positive);
  CHECK(a.is_phi);
  CHECK(a.is_psi);
  CHECK(a.total_disp == 4);

  const LoopClass b = classify_loop(loop_of(x4, {{0, 2}, {2, 6}}));
  CHECK(b.is_loop);
  CHECK(b.is_phi);
  CHECK_FALSE(b.is_psi);
  CHECK(b.total_disp == 8);

  const LoopClass c = classify_loop(loop_of(x4, {{0, 2}, {2, 1}}));
  CHECK_FALSE(c.is_loop);
  CHECK_FALSE(c.is_phi);

  CHECK_THROWS_AS(classify_loop({make_arrow(x4, 0, 4), make_arrow(make_groupoid(2), 0, 2)}),
                  Error);
}

TEST_CASE("loop composites") {
  const Groupoid x4 = make_groupoid(4);
  const Loop x = loop_of(x4, {{0, 2}, {2, 2}});
  CHECK(loop_composite(x, 1) == make_arrow(x4, 0, 4));
  CHECK(loop_composite(x, 2) == make_arrow(x4, 2, 4));
  CHECK_THROWS_AS(loop_composite(x, 3), Error);

  const Groupoid x5 = make_groupoid(5);
  CHECK(loop_composite(loop_of(x5, {{0, 1}, {1, 3}, {4, 1}}), 1) == make_arrow(x5, 0, 5));
}

TEST_CASE("factorization splits displacement into path plus windings") {
  const Groupoid x5 = make_groupoid(5);
  const Factorization a = factorize_arrow(make_arrow(x5, 1, 7));
  CHECK(a.base_path_length == 2);
  CHECK(a.winding == 1);
  const Factorization b = factorize_arrow(make_arrow(x5, 2, 0));
  CHECK(b.base_path_length == 0);
  CHECK(b.winding == 0);
  const Factorization c = factorize_arrow(make_arrow(x5, 0, 5));
  CHECK(c.base_path_length == 0);
  CHECK(c.winding == 1);
}

TEST_CASE("factorization round-trip and uniqueness over a window") {
  for (int64_t n = 1; n <= 8; ++n) {
    const Groupoid g = make_groupoid(n);
    for (const Arrow& f : enumerate_arrows(g, 4 * n)) {
      const Factorization fac = factorize_arrow(f);
      CHECK(fac.base_path_length >= 0);
      CHECK(fac.base_path_length < n);
      CHECK(fac.base_path_length + fac.winding * n == f.disp);
      if (f.disp >= 0) CHECK(fac.winding >= 0);
      // no other in-range pair reproduces the displacement
      int matches = 0;
      for (int64_t c = 0; c < n; ++c)
        for (int64_t b = -4 - 1; b <= 4 + 1; ++b)
          if (c + b * n == f.disp) ++matches;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("pmin is the minimal positive arrow") {
  const Groupoid x3 = make_groupoid(3);
  CHECK(pmin(x3, 0, 2) == make_arrow(x3, 0, 2));
  CHECK(pmin(x3, 1, 1) == make_arrow(x3, 1, 0));
  CHECK(pmin(make_groupoid(1), 0, 0) == make_arrow(make_groupoid(1), 0, 0));

  // oracle: a positive g completes pmin(a, b) to the elementary cycle
  for (int64_t n = 1; n <= 6; ++n) {
    const Groupoid g = make_groupoid(n);
    for (int64_t a = 0; a < n; ++a)
      for (int64_t b = 0; b < n; ++b) {
        const Arrow f = pmin(g, a, b);
        CHECK(f.disp >= 0);
        bool completes = false;
        for (int64_t d = 0; d <= 2 * n && !completes; ++d)
          completes = compose(make_arrow(g, b, d), f) == cycle_of(g, a);
        CHECK(completes);
      }
  }
}

TEST_CASE("factoring through the cycle") {
  const Groupoid x3 = make_groupoid(3);
  const CycleFactor a = factor_through_cycle(make_arrow(x3, 1, 7));
  CHECK(a.alpha == make_arrow(x3, 1, 1));
  CHECK(a.winding == 2);
  const CycleFactor b = factor_through_cycle(make_arrow(x3, 0, 2));
  CHECK(b.alpha == make_arrow(x3, 0, 2));
  CHECK(b.winding == 0);
  const CycleFactor c = factor_through_cycle(make_arrow(x3, 2, 3));
  CHECK(c.alpha == make_arrow(x3, 2, 0));
  CHECK(c.winding == 1);
  CHECK_THROWS_AS(factor_through_cycle(make_arrow(x3, 0, -1)), Error);
}

TEST_CASE("cycle factorization recomposes and is unique over canonical pairs") {
  for (int64_t n = 1; n <= 6; ++n) {
    const Groupoid g = make_groupoid(n);
    for (int64_t src = 0; src < n; ++src)
      for (int64_t disp = 0; disp <= 4 * n; ++disp) {
        const Arrow f = make_arrow(g, src, disp);
        const CycleFactor cf = factor_through_cycle(f);
        CHECK(cf.alpha == pmin(g, f.src, cod(f)));
        // recompose: alpha o C^winding
        Arrow acc = identity_arrow(g, src);
        for (int64_t t = 0; t < cf.winding; ++t) acc = compose(cycle_of(g, src), acc);
        CHECK(compose(cf.alpha, acc) == f);
        // unique among (minimal arrow, winding) pairs with the arrow part
        // strictly inside one cycle
        int matches = 0;
        for (int64_t c = 0; c < n; ++c)
          for (int64_t w = 0; w <= 5; ++w)
            if (floor_mod(src + c, n) == cod(f) && c + w * n == disp) ++matches;
        CHECK(matches == 1);
      }
  }
}

TEST_CASE("decomposition against the unit loop of X_5") {
  const Groupoid x5 = make_groupoid(5);
  const Loop z = loop_of(x5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
  const Loop x = loop_of(x5, {{0, 1}, {1, 3}, {4, 1}});
  const Loop y = loop_of(x5, {{2, 1}, {3, 1}, {4, 1}, {0, 2}});

  const GenWitness w = decompose_against(z, x, y, GenMode::epicyclic);
  REQUIRE(w.blocks.size() == 3);
  CHECK(w.blocks[0] == WitnessBlock{1, 1, 0});
  CHECK(w.blocks[1] == WitnessBlock{2, 3, 0});
  CHECK(w.blocks[2] == WitnessBlock{5, 1, 0});
  CHECK(w.rotation == 0);
  REQUIRE(w.second_blocks.size() == 4);
  CHECK(w.second_blocks[0] == WitnessBlock{3, 1, 0});

  CHECK(oracle::reapply(z, w.blocks) == x);
  CHECK(oracle::reapply(z, w.second_blocks) == y);
}

TEST_CASE("a loop decomposes against itself with singleton blocks") {
  const Groupoid x4 = make_groupoid(4);
  const Loop z = loop_of(x4, {{0, 2}, {2, 2}});
  const GenWitness w = decompose_against(z, z, std::nullopt, GenMode::cyclic);
  REQUIRE(w.blocks.size() == 2);
  CHECK(w.blocks[0] == WitnessBlock{1, 1, 0});
  CHECK(w.blocks[1] == WitnessBlock{2, 1, 0});
  CHECK_FALSE(w.ternary);
}

TEST_CASE("windings absorb extra turns") {
  const Groupoid x2 = make_groupoid(2);
  const Loop z = loop_of(x2, {{0, 1}, {1, 1}});
  const GenWitness w = decompose_against(z, loop_of(x2, {{0, 4}}), std::nullopt,
                                         GenMode::epicyclic);
  REQUIRE(w.blocks.size() == 1);
  CHECK(w.blocks[0] == WitnessBlock{1, 2, 1});
  CHECK(oracle::reapply(z, w.blocks) == loop_of(x2, {{0, 4}}));
}

TEST_CASE("decomposition failures are reported") {
  const Groupoid x4 = make_groupoid(4);
  const Loop z = loop_of(x4, {{0, 2}, {2, 2}});  // never visits object 1
  CHECK_THROWS_AS(decompose_against(z, loop_of(x4, {{1, 4}}), std::nullopt, GenMode::cyclic),
                  Error);  // base mismatch
  CHECK_THROWS_AS(
      decompose_against(z, loop_of(x4, {{0, 1}, {1, 3}}), std::nullopt, GenMode::cyclic),
      Error);  // no witness: needs object 1
}

TEST_CASE("minimal generator for the worked cyclic example") {
  const Groupoid x4 = make_groupoid(4);
  const Loop x = loop_of(x4, {{0, 2}, {2, 2}});
  const Loop y = loop_of(x4, {{1, 1}, {2, 3}});
  const MinimalGenerator mg = minimal_generator(x, y, GenMode::cyclic);
  CHECK(mg.z == loop_of(x4, {{0, 1}, {1, 1}, {2, 2}}));
  CHECK(classify_loop(mg.z).is_psi);
  CHECK(oracle::reapply(mg.z, mg.witness.blocks) == x);
  // the second target reproduces after undoing the alignment rotation
  Loop y_rot(y.begin() + mg.witness.rotation, y.end());
  y_rot.insert(y_rot.end(), y.begin(), y.begin() + mg.witness.rotation);
  CHECK(oracle::reapply(mg.z, mg.witness.second_blocks) == y_rot);
}

TEST_CASE("minimal generator for the worked epicyclic example") {
  const Groupoid x5 = make_groupoid(5);
  const Loop x = loop_of(x5, {{0, 1}, {1, 3}, {4, 1}});
  const Loop y = loop_of(x5, {{2, 1}, {3, 1}, {4, 1}, {0, 2}});
  const MinimalGenerator mg = minimal_generator(x, y, GenMode::epicyclic);
  CHECK(mg.z == loop_of(x5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  CHECK(mg.z.size() == 5);
}

TEST_CASE("a self-pair with distinct domains generates itself") {
  const Groupoid x4 = make_groupoid(4);
  const Loop x = loop_of(x4, {{0, 2}, {2, 2}});
  const MinimalGenerator mg = minimal_generator(x, x, GenMode::cyclic);
  CHECK(mg.z == x);
  for (const WitnessBlock& b : mg.witness.blocks) CHECK(b.len == 1);
}

TEST_CASE("minimal generator postconditions on seeded random pairs") {
  std::mt19937_64 rng(2024);
  for (const GenMode mode : {GenMode::epicyclic, GenMode::cyclic}) {
    for (int round = 0; round < 500; ++round) {
      const Groupoid g = make_groupoid(1 + static_cast<int64_t>(rng() % 6));
      Loop x = random_loop(rng, g, mode == GenMode::cyclic);
      Loop y = random_loop(rng, g, mode == GenMode::cyclic);
      const MinimalGenerator mg = minimal_generator(x, y, mode);

      std::set<int64_t> doms, expected;
      for (const Arrow& f : mg.z) CHECK(doms.insert(f.src).second);
      for (const Arrow& f : x) expected.insert(f.src);
      for (const Arrow& f : y) expected.insert(f.src);
      CHECK(doms == expected);
      CHECK(mg.z.size() == expected.size());
      CHECK(mg.z.front().src == x.front().src);
      const LoopClass zc = classify_loop(mg.z);
      CHECK((mode == GenMode::cyclic ? zc.is_psi : zc.is_phi));

      CHECK(oracle::reapply(mg.z, mg.witness.blocks) == x);
      Loop y_rot(y.begin() + mg.witness.rotation, y.end());
      y_rot.insert(y_rot.end(), y.begin(), y.begin() + mg.witness.rotation);
      CHECK(oracle::reapply(mg.z, mg.witness.second_blocks) == y_rot);

      // witness uniqueness against the minimal generator
      CHECK(oracle::count_witnesses(mg.z, x, 0, 8) == 1);
    }
  }
}

TEST_CASE("witness-represented arrows are closed under composition and inverse") {
  // Against a distinct-domain generator, every arrow expressible as a block
  // with windings stays expressible after composing or inverting, with the
  // winding allowed to range over all integers.
  for (int64_t n = 2; n <= 5; ++n) {
    const Groupoid g = make_groupoid(n);
    Loop z;
    for (int64_t i = 0; i < n; ++i) z.push_back(make_arrow(g, i, 1));
    const auto represent = [&](const Arrow& f) {
      // search (start, len, winding in Z)
      for (int64_t p = 0; p < n; ++p) {
        if (z[static_cast<size_t>(p)].src != f.src) continue;
        for (int64_t r = 0; r <= n; ++r) {
          int64_t rd = 0;
          for (int64_t t = 0; t < r; ++t) rd += z[static_cast<size_t>((p + t) % n)].disp;
          if (floor_mod(f.src + rd, n) != cod(f)) continue;
          if ((f.disp - rd) % n == 0) return true;
        }
      }
      return false;
    };
    std::vector<Arrow> represented;
    for (const Arrow& f : enumerate_arrows(g, 2 * n))
      if (represent(f)) represented.push_back(f);
    for (const Arrow& f : represented) {
      CHECK(represent(inverse(f)));
      for (const Arrow& h : represented) {
        if (cod(f) != h.src) continue;
        CHECK(represent(compose(h, f)));
      }
    }
  }
}

TEST_CASE("insert_object splits an elementary cycle") {
  const Groupoid x4 = make_groupoid(4);
  const Loop x = loop_of(x4, {{0, 2}, {2, 2}});
  const InsertSplit a = insert_object(x, 1);
  CHECK(a.index == 1);
  CHECK(a.alpha == make_arrow(x4, 0, 1));
  CHECK(a.beta == make_arrow(x4, 1, 1));

  const InsertSplit b = insert_object(x, 2);  // an existing domain
  CHECK(b.index == 2);
  CHECK(b.alpha == make_arrow(x4, 2, 0));
  CHECK(b.beta == make_arrow(x4, 2, 2));

  const Groupoid x1 = make_groupoid(1);
  const InsertSplit c = insert_object({make_arrow(x1, 0, 1)}, 0);
  CHECK(c.index == 1);
  CHECK(c.alpha == make_arrow(x1, 0, 0));
  CHECK(c.beta == make_arrow(x1, 0, 1));
}

TEST_CASE("insert_object refines to an elementary cycle and collapses back") {
  for (int64_t n = 1; n <= 5; ++n) {
    const Groupoid g = make_groupoid(n);
    std::mt19937_64 rng(7 * static_cast<uint64_t>(n));
    for (int round = 0; round < 40; ++round) {
      const Loop x = random_loop(rng, g, true);
      for (int64_t c = 0; c < n; ++c) {
        const InsertSplit s = insert_object(x, c);
        CHECK(compose(s.beta, s.alpha) == x[static_cast<size_t>(s.index - 1)]);
        CHECK(s.beta.src == c);
        CHECK(s.alpha.disp >= 0);
        CHECK(s.beta.disp >= 0);
        Loop refined(x.begin(), x.begin() + (s.index - 1));
        refined.push_back(s.alpha);
        refined.push_back(s.beta);
        refined.insert(refined.end(), x.begin() + s.index, x.end());
        CHECK(classify_loop(refined).is_psi);
        CHECK(refined.size() == x.size() + 1);
      }
    }
  }
}
