#include "morphism.hpp"

#include <algorithm>

namespace cyclo {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Morphism::Morphism(int64_t src_n, int64_t dst_m, int64_t degree, int64_t base,
                   std::vector<int64_t> blocks)
    : n_(src_n), m_(dst_m), k_(degree), base_(base), blocks_(std::move(blocks)) {
  require(n_ >= 1 && m_ >= 1, Errc::invalid_argument, "model sizes must be >= 1");
  require(k_ >= 1, Errc::nonpositive_degree, "degree must be >= 1");
  require(base_ >= 0 && base_ < m_, Errc::invalid_argument, "base object out of range");
  require(static_cast<int64_t>(blocks_.size()) == n_, Errc::invalid_argument,
          "expected one block per source generator");
  int64_t sum = 0;
  for (int64_t b : blocks_) {
    require(b >= 0, Errc::invalid_argument, "blocks must be nonnegative");
    sum += b;
  }
  require(sum == k_ * m_, Errc::sum_mismatch,
          "blocks sum to " + std::to_string(sum) + ", expected degree*m = " +
              std::to_string(k_ * m_));
  prefix_.resize(static_cast<size_t>(n_) + 1, 0);
  for (int64_t i = 0; i < n_; ++i)
    prefix_[static_cast<size_t>(i + 1)] = prefix_[static_cast<size_t>(i)] + blocks_[static_cast<size_t>(i)];
}

int64_t Morphism::staircase(int64_t j) const {
  const int64_t q = floor_div(j, n_);
  const int64_t r = j - q * n_;
  return q * k_ * m_ + prefix_[static_cast<size_t>(r)];
}

int64_t Morphism::apply_object(int64_t i) const {
  require(i >= 0 && i < n_, Errc::invalid_argument, "object out of range");
  return floor_mod(base_ + prefix_[static_cast<size_t>(i)], m_);
}

Arrow Morphism::apply(const Arrow& f) const {
  require(f.n == n_, Errc::model_mismatch, "arrow does not live in the source model");
  const int64_t lo = staircase(f.src);
  const int64_t hi = staircase(f.src + f.disp);
  return Arrow{m_, floor_mod(base_ + lo, m_), hi - lo};
}

Morphism identity_morphism(int64_t n) {
  return Morphism(n, n, 1, 0, std::vector<int64_t>(static_cast<size_t>(n), 1));
}

Morphism compose(const Morphism& h2, const Morphism& h1) {
  require(h1.dst_m() == h2.src_n(), Errc::model_mismatch,
          "morphisms are not composable");
  std::vector<int64_t> blocks;
  blocks.reserve(static_cast<size_t>(h1.src_n()));
  for (int64_t i = 0; i < h1.src_n(); ++i)
    blocks.push_back(h2.apply(h1.apply(Arrow{h1.src_n(), i, 1})).disp);
  const int64_t base = h2.apply_object(h1.apply_object(0));
  return Morphism(h1.src_n(), h2.dst_m(), h1.degree() * h2.degree(), base, std::move(blocks));
}

int64_t mod_of(const Morphism& h) { return h.degree(); }

namespace {

void weak_compositions(int64_t total, int64_t parts, std::vector<int64_t>& cur,
                       std::vector<std::vector<int64_t>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int64_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    weak_compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

bool colex_less(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<Morphism> enumerate_homs(int64_t n, int64_t m, int64_t max_degree) {
  require(n >= 1 && m >= 1, Errc::invalid_argument, "model sizes must be >= 1");
  require(max_degree >= 1, Errc::invalid_argument, "max degree must be >= 1");
  std::vector<Morphism> out;
  for (int64_t k = 1; k <= max_degree; ++k) {
    std::vector<std::vector<int64_t>> comps;
    std::vector<int64_t> cur;
    weak_compositions(k * m, n, cur, comps);
    for (int64_t base = 0; base < m; ++base)
      for (auto& c : comps) out.emplace_back(n, m, k, base, c);
  }
  std::sort(out.begin(), out.end(), [](const Morphism& a, const Morphism& b) {
    if (a.base() != b.base()) return a.base() < b.base();
    if (a.blocks() != b.blocks()) return colex_less(a.blocks(), b.blocks());
    return a.degree() < b.degree();
  });
  return out;
}

int64_t hom_count_lambda(int64_t n, int64_t m) {
  require(n >= 1 && m >= 1, Errc::invalid_argument, "model sizes must be >= 1");
  // m * C(n+m-1, n-1)
  __int128 r = 1;
  const int64_t a = n + m - 1, b = n - 1;
  for (int64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i);
    r /= i;
    require(r <= static_cast<__int128>(INT64_MAX), Errc::overflow, "hom count overflows");
  }
  r *= m;
  require(r <= static_cast<__int128>(INT64_MAX), Errc::overflow, "hom count overflows");
  return static_cast<int64_t>(r);
}

namespace {

// A raw generator-image assignment, independent of the morphism normal form:
// object 0 goes to obj0 and generator i advances the image by steps[i].
struct RawMap {
  int64_t n, m, obj0;
  std::vector<int64_t> steps;

  int64_t walk(int64_t from, int64_t upto) const {  // displacement of the image path
    int64_t d = 0;
    if (upto >= from)
      for (int64_t j = from; j < upto; ++j) d += steps[static_cast<size_t>(floor_mod(j, n))];
    else
      for (int64_t j = upto; j < from; ++j) d -= steps[static_cast<size_t>(floor_mod(j, n))];
    return d;
  }

  int64_t image_obj(int64_t i) const { return floor_mod(obj0 + walk(0, i), m); }
  Arrow image(const Arrow& f) const {
    return Arrow{m, image_obj(f.src), walk(f.src, f.src + f.disp)};
  }

  // Model-map checks over a finite window: compatibility with composition and
  // inverses, preservation of P, and preservation of elementary cycles.
  bool is_cyclic_functor(int64_t window) const {
    const Groupoid src{n};
    for (const Arrow& f : enumerate_arrows(src, window)) {
      const Arrow ff = image(f);
      if (image(inverse(f)) != inverse(ff)) return false;
      if (f.disp >= 0 && ff.disp < 0) return false;  // P
      for (const Arrow& g : enumerate_arrows(src, window)) {
        if (cod(f) != g.src) continue;
        if (image(compose(g, f)) != compose(image(g), ff)) return false;
      }
    }
    for (int64_t a = 0; a < n; ++a)
      if (image(cycle_of(src, a)) != cycle_of(Groupoid{m}, image_obj(a))) return false;
    return true;
  }
};

}  // namespace

InclusionReport check_inclusion_full(int64_t n, int64_t m) {
  InclusionReport rep;
  std::vector<Morphism> degree_one;
  for (const Morphism& h : enumerate_homs(n, m, 1)) degree_one.push_back(h);
  rep.degree_one_count = static_cast<int64_t>(degree_one.size());

  // Brute force: every raw assignment with nonnegative steps summing to m,
  // filtered by the functor checks.
  std::vector<RawMap> cyclic_maps;
  std::vector<std::vector<int64_t>> comps;
  std::vector<int64_t> cur;
  weak_compositions(m, n, cur, comps);
  for (int64_t obj0 = 0; obj0 < m; ++obj0)
    for (const auto& steps : comps) {
      RawMap raw{n, m, obj0, steps};
      if (raw.is_cyclic_functor(2 * n)) cyclic_maps.push_back(std::move(raw));
    }
  rep.cyclic_functor_count = static_cast<int64_t>(cyclic_maps.size());

  // Elementwise comparison by action on generators.
  for (const Morphism& h : degree_one) {
    const bool found = std::any_of(cyclic_maps.begin(), cyclic_maps.end(), [&](const RawMap& r) {
      if (r.image_obj(0) != h.apply_object(0)) return false;
      for (int64_t i = 0; i < n; ++i)
        if (r.image(Arrow{n, i, 1}) != h.apply(Arrow{n, i, 1})) return false;
      return true;
    });
    if (!found) {
      rep.mismatch = "degree-1 morphism not matched by any cyclic functor";
      return rep;
    }
  }
  if (rep.degree_one_count != rep.cyclic_functor_count) {
    rep.mismatch = "counts differ: " + std::to_string(rep.degree_one_count) + " vs " +
                   std::to_string(rep.cyclic_functor_count);
    return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace cyclo
