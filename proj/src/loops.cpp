#include "loops.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

namespace {

void check_loop_pre(const Loop& x) {
  require(!x.empty(), Errc::invalid_argument, "empty loop");
  for (const Arrow& f : x)
    require(f.n == x.front().n, Errc::model_mismatch, "loop mixes models");
}

int64_t total_disp(const Loop& x) {
  int64_t t = 0;
  for (const Arrow& f : x) t += f.disp;
  return t;
}

bool chains(const Loop& x) {
  const size_t len = x.size();
  for (size_t i = 0; i < len; ++i)
    if (cod(x[i]) != x[(i + 1) % len].src) return false;
  return true;
}

}  // namespace

LoopClass classify_loop(const Loop& arrows) {
  check_loop_pre(arrows);
  LoopClass c;
  c.length = static_cast<int64_t>(arrows.size());
  c.total_disp = total_disp(arrows);
  c.is_loop = chains(arrows);
  if (!c.is_loop) return c;
  c.is_positive = std::all_of(arrows.begin(), arrows.end(),
                              [](const Arrow& f) { return f.disp >= 0; });
  const int64_t n = arrows.front().n;
  c.is_phi = c.is_positive && c.total_disp != 0 && c.total_disp % n == 0;
  c.is_psi = c.is_positive && c.total_disp == n;
  return c;
}

Arrow loop_composite(const Loop& x, int64_t i) {
  check_loop_pre(x);
  require(chains(x), Errc::precondition_violated, "not a loop");
  require(i >= 1 && i <= static_cast<int64_t>(x.size()), Errc::index_out_of_range,
          "loop index " + std::to_string(i) + " out of range");
  return Arrow{x.front().n, x[static_cast<size_t>(i - 1)].src, total_disp(x)};
}

Factorization factorize_arrow(const Arrow& f) {
  const int64_t c = floor_mod(f.disp, f.n);
  return Factorization{c, (f.disp - c) / f.n};
}

Arrow pmin(const Groupoid& g, int64_t a, int64_t b) {
  require(a >= 0 && a < g.n && b >= 0 && b < g.n, Errc::invalid_argument,
          "object out of range");
  return Arrow{g.n, a, floor_mod(b - a, g.n)};
}

CycleFactor factor_through_cycle(const Arrow& f) {
  require(f.disp >= 0, Errc::not_positive, "factor_through_cycle needs a positive arrow");
  const Factorization fac = factorize_arrow(f);
  return CycleFactor{Arrow{f.n, f.src, fac.base_path_length}, fac.winding};
}

namespace {

// Precomputed geometry of a generating loop: objects at positions (1-based)
// and displacement of the run of length r starting at each position.
struct LoopIndex {
  const Loop& z;
  int64_t k;
  int64_t ldisp;
  std::vector<int64_t> obj;       // obj[p] for p in 0..k-1: dom(z_{p+1})
  std::vector<int64_t> prefix;    // prefix[p]: sum of disps of z_1..z_p

  explicit LoopIndex(const Loop& loop) : z(loop), k(static_cast<int64_t>(loop.size())) {
    obj.resize(static_cast<size_t>(k));
    prefix.resize(static_cast<size_t>(k) + 1, 0);
    for (int64_t p = 0; p < k; ++p) {
      obj[static_cast<size_t>(p)] = loop[static_cast<size_t>(p)].src;
      prefix[static_cast<size_t>(p + 1)] = prefix[static_cast<size_t>(p)] + loop[static_cast<size_t>(p)].disp;
    }
    ldisp = prefix[static_cast<size_t>(k)];
  }

  // Displacement of the run of length r from 0-based position p (may wrap).
  int64_t run_disp(int64_t p, int64_t r) const {
    const int64_t end = p + r;
    if (end <= k) return prefix[static_cast<size_t>(end)] - prefix[static_cast<size_t>(p)];
    return ldisp - prefix[static_cast<size_t>(p)] + prefix[static_cast<size_t>(end - k)];
  }

  int64_t obj_at(int64_t p) const { return obj[static_cast<size_t>(floor_mod(p, k))]; }
};

// Finds successive blocks for the target starting at 0-based position p0.
// Identity arrows take the empty block; every other arrow takes a run of
// length 1..k (a full turn for endomorphisms) plus a nonnegative winding.
// This is the normal form under which decompositions against a generator
// with pairwise distinct domains are unique.
bool decompose_from(const LoopIndex& zi, const Loop& target, int64_t p0, int64_t max_winding,
                    std::vector<WitnessBlock>& out) {
  const int64_t n = static_cast<int64_t>(target.size());
  out.assign(static_cast<size_t>(n), WitnessBlock{});

  // Backtracking over run lengths; a run of length r from position p must end
  // at an occurrence of cod(target_i), with the leftover displacement a
  // nonnegative multiple of the full-loop displacement.
  std::vector<int64_t> rs(static_cast<size_t>(n), 0);
  int64_t i = 0;
  int64_t pos = p0;
  while (true) {
    bool placed = false;
    const Arrow& t = target[static_cast<size_t>(i)];
    const int64_t r_lo = t.disp == 0 ? 0 : 1;
    const int64_t r_hi = t.disp == 0 ? 0 : zi.k;
    for (int64_t r = std::max(r_lo, rs[static_cast<size_t>(i)]); r <= r_hi; ++r) {
      if (zi.obj_at(pos + r) != cod(t)) continue;
      const int64_t rem = t.disp - zi.run_disp(floor_mod(pos, zi.k), r);
      if (rem < 0 || rem % zi.ldisp != 0) continue;
      const int64_t p = rem / zi.ldisp;
      if (max_winding >= 0 && p > max_winding) continue;
      out[static_cast<size_t>(i)] = WitnessBlock{floor_mod(pos, zi.k) + 1, r, p};
      rs[static_cast<size_t>(i)] = r + 1;  // resume point on backtrack
      pos += r;
      placed = true;
      break;
    }
    if (placed) {
      if (i == n - 1) return true;
      ++i;
      rs[static_cast<size_t>(i)] = 0;
      continue;
    }
    // backtrack
    if (i == 0) return false;
    --i;
    pos -= out[static_cast<size_t>(i)].len;
  }
}

}  // namespace

Loop apply_witness(const Loop& z, const std::vector<WitnessBlock>& blocks) {
  const LoopIndex zi(z);
  Loop out;
  out.reserve(blocks.size());
  for (const WitnessBlock& b : blocks) {
    const int64_t p = b.start - 1;
    require(p >= 0 && p < zi.k && b.len >= 0 && b.winding >= 0, Errc::invalid_argument,
            "malformed witness block");
    out.push_back(Arrow{z.front().n, zi.obj_at(p), zi.run_disp(p, b.len) + b.winding * zi.ldisp});
  }
  return out;
}

bool generates(const Loop& z, const Loop& x, const std::optional<Loop>& y) {
  if (z.empty() || x.empty()) return false;
  if (!classify_loop(z).is_phi) return false;
  if (x.front().n != z.front().n || x.front().src != z.front().src) return false;
  const LoopIndex zi(z);
  std::vector<WitnessBlock> scratch;
  if (!decompose_from(zi, x, 0, -1, scratch)) return false;
  if (!y) return true;
  if (y->front().n != z.front().n) return false;
  const int64_t m = static_cast<int64_t>(y->size());
  for (int64_t rot = 0; rot < m; ++rot) {
    Loop yr(y->begin() + rot, y->end());
    yr.insert(yr.end(), y->begin(), y->begin() + rot);
    for (int64_t p0 = 0; p0 < zi.k; ++p0) {
      if (zi.obj_at(p0) != yr.front().src) continue;
      if (decompose_from(zi, yr, p0, -1, scratch)) return true;
    }
  }
  return false;
}

GenWitness decompose_against(const Loop& z, const Loop& x, const std::optional<Loop>& y,
                             GenMode mode, int64_t max_winding) {
  check_loop_pre(z);
  check_loop_pre(x);
  const LoopClass zc = classify_loop(z);
  if (mode == GenMode::epicyclic)
    require(zc.is_phi, Errc::precondition_violated, "generator is not a positive non-trivial loop");
  else
    require(zc.is_psi, Errc::precondition_violated, "generator is not an elementary cycle");
  require(x.front().n == z.front().n, Errc::model_mismatch, "target and generator models differ");
  require(x.front().src == z.front().src, Errc::base_mismatch,
          "first target must be based at dom(z_1)");

  const LoopIndex zi(z);
  GenWitness w;
  if (!decompose_from(zi, x, 0, max_winding, w.blocks))
    fail(Errc::no_witness, "generator does not produce the first target");

  if (y) {
    check_loop_pre(*y);
    require(y->front().n == z.front().n, Errc::model_mismatch, "target and generator models differ");
    w.ternary = true;
    const int64_t m = static_cast<int64_t>(y->size());
    bool found = false;
    for (int64_t rot = 0; rot < m && !found; ++rot) {
      Loop yr(y->begin() + rot, y->end());
      yr.insert(yr.end(), y->begin(), y->begin() + rot);
      for (int64_t p0 = 0; p0 < zi.k && !found; ++p0) {
        if (zi.obj_at(p0) != yr.front().src) continue;
        if (decompose_from(zi, yr, p0, max_winding, w.second_blocks)) {
          w.rotation = rot;
          found = true;
        }
      }
    }
    if (!found) fail(Errc::no_witness, "generator does not produce the second target");
  }
  return w;
}

namespace {

Loop strip_identities(Loop z) {
  Loop out;
  for (const Arrow& f : z)
    if (f.disp != 0) out.push_back(f);
  return out;
}

}  // namespace

InsertSplit insert_object(const Loop& x, int64_t c) {
  const LoopClass xc = classify_loop(x);
  require(xc.is_psi, Errc::precondition_violated, "insert_object needs an elementary cycle");
  const int64_t n = x.front().n;
  require(c >= 0 && c < n, Errc::invalid_argument, "object out of range");
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i].src == c)
      return InsertSplit{static_cast<int64_t>(i) + 1, Arrow{n, c, 0}, x[i]};
  // c lies strictly inside the span of exactly one arrow: the spans of an
  // elementary cycle tile the circle once.
  for (size_t i = 0; i < x.size(); ++i) {
    const int64_t off = floor_mod(c - x[i].src, n);
    if (off > 0 && off < x[i].disp)
      return InsertSplit{static_cast<int64_t>(i) + 1, Arrow{n, x[i].src, off},
                         Arrow{n, c, x[i].disp - off}};
  }
  fail(Errc::precondition_violated, "no arrow of the cycle passes through the object");
}

MinimalGenerator minimal_generator(const Loop& x, const Loop& y, GenMode mode) {
  const LoopClass xc = classify_loop(x);
  const LoopClass yc = classify_loop(y);
  if (mode == GenMode::epicyclic)
    require(xc.is_phi && yc.is_phi, Errc::precondition_violated,
            "both targets must be positive non-trivial loops");
  else
    require(xc.is_psi && yc.is_psi, Errc::precondition_violated,
            "both targets must be elementary cycles");
  require(x.front().n == y.front().n, Errc::model_mismatch, "targets live in different models");

  const int64_t n = x.front().n;
  const int64_t base = x.front().src;
  Loop z;

  if (mode == GenMode::epicyclic) {
    // The cyclically ordered walk through the distinct domains, based at
    // dom(x_1).
    std::set<int64_t> doms;
    for (const Arrow& f : x) doms.insert(f.src);
    for (const Arrow& f : y) doms.insert(f.src);
    std::vector<int64_t> ordered(doms.begin(), doms.end());
    std::sort(ordered.begin(), ordered.end(), [&](int64_t a, int64_t b) {
      return floor_mod(a - base, n) < floor_mod(b - base, n);
    });
    if (ordered.size() == 1) {
      z.push_back(Arrow{n, base, n});
    } else {
      for (size_t t = 0; t < ordered.size(); ++t) {
        const int64_t from = ordered[t];
        const int64_t to = ordered[(t + 1) % ordered.size()];
        z.push_back(Arrow{n, from, floor_mod(to - from, n)});
      }
    }
  } else {
    // Insertion recursion: refine x at each domain of y, then drop the
    // identities that the refinement introduced.
    z = x;
    for (const Arrow& f : y) {
      const InsertSplit s = insert_object(z, f.src);
      Loop next(z.begin(), z.begin() + (s.index - 1));
      next.push_back(s.alpha);
      next.push_back(s.beta);
      next.insert(next.end(), z.begin() + s.index, z.end());
      z = next;
    }
    z = strip_identities(z);
    // rotate so that the loop stays based at dom(x_1)
    auto it = std::find_if(z.begin(), z.end(), [&](const Arrow& f) { return f.src == base; });
    require(it != z.end(), Errc::no_witness, "refined cycle lost its base");
    std::rotate(z.begin(), it, z.end());
  }

  // Postconditions: distinct domains, correct base and length.
  std::set<int64_t> seen;
  for (const Arrow& f : z)
    require(seen.insert(f.src).second, Errc::no_witness, "generator has a repeated domain");
  std::set<int64_t> doms;
  for (const Arrow& f : x) doms.insert(f.src);
  for (const Arrow& f : y) doms.insert(f.src);
  require(seen == doms, Errc::no_witness, "generator misses a target domain");
  require(z.front().src == base, Errc::base_mismatch, "generator not based at dom(x_1)");

  GenWitness w = decompose_against(z, x, std::optional<Loop>(y), mode);
  return MinimalGenerator{std::move(z), std::move(w)};
}

}  // namespace cyclo
