#include "subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cyclo {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::map<int64_t, int64_t> factorize_int(int64_t v) {
  std::map<int64_t, int64_t> out;
  for (int64_t d = 2; d * d <= v; ++d)
    while (v % d == 0) {
      ++out[d];
      v /= d;
    }
  if (v > 1) ++out[v];
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  require(!__builtin_mul_overflow(a, b, &r), Errc::overflow, "integer overflow");
  return r;
}

}  // namespace

Subgroup::Subgroup(Rat scale, std::map<int64_t, Height> heights)
    : scale_(scale), heights_(std::move(heights)) {
  require(scale_.sign() > 0, Errc::invalid_argument, "scale must be a positive rational");
  for (auto it = heights_.begin(); it != heights_.end();) {
    require(is_prime(it->first), Errc::invalid_argument,
            std::to_string(it->first) + " is not prime");
    require(it->second.infinite || it->second.cap >= 0, Errc::invalid_argument,
            "negative height");
    if (!it->second.infinite && it->second.cap == 0)
      it = heights_.erase(it);  // height zero = untracked
    else
      ++it;
  }
}

bool Subgroup::contains(const Rat& q) const {
  const Rat t = q / scale_;
  for (const auto& [prime, exp] : factorize_int(t.den())) {
    const auto it = heights_.find(prime);
    if (it == heights_.end()) return false;
    if (!it->second.infinite && exp > it->second.cap) return false;
  }
  return true;
}

std::vector<Rat> Subgroup::sample_elements(int64_t bound) const {
  require(bound >= 1, Errc::invalid_argument, "sample bound must be >= 1");
  // Denominators: products of tracked prime powers, exponents and magnitude
  // capped by the bound.
  std::vector<int64_t> dens{1};
  constexpr int64_t kDenCap = 1'000'000;
  for (const auto& [prime, height] : heights_) {
    const int64_t emax = height.infinite ? bound : std::min(bound, height.cap);
    std::vector<int64_t> next;
    for (int64_t d : dens) {
      int64_t pe = 1;
      for (int64_t e = 0; e <= emax; ++e) {
        if (d <= kDenCap / pe) next.push_back(d * pe);
        if (e < emax) pe = checked_mul(pe, prime);
      }
    }
    dens = std::move(next);
  }
  std::set<Rat> out;
  for (int64_t d : dens)
    for (int64_t num = 0; num <= bound; ++num) {
      const Rat v = scale_ * Rat(num, d);
      out.insert(v);
      out.insert(-v);
    }
  return std::vector<Rat>(out.begin(), out.end());
}

std::map<int64_t, Height> Subgroup::parse_heights(const std::string& text) {
  std::map<int64_t, Height> out;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    const size_t colon = item.find(':');
    require(colon != std::string::npos, Errc::parse_error,
            "height entry '" + item + "' is not prime:height");
    int64_t prime = 0;
    try {
      prime = std::stoll(item.substr(0, colon));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad prime in '" + item + "'");
    }
    const std::string h = item.substr(colon + 1);
    Height height;
    if (h == "inf") {
      height.infinite = true;
    } else {
      try {
        height.cap = std::stoll(h);
      } catch (const std::exception&) {
        fail(Errc::parse_error, "bad height in '" + item + "'");
      }
    }
    out[prime] = height;
  }
  return out;
}

std::string Subgroup::heights_str() const {
  std::string out;
  for (const auto& [prime, height] : heights_) {
    if (!out.empty()) out += ",";
    out += std::to_string(prime) + ":" + (height.infinite ? "inf" : std::to_string(height.cap));
  }
  return out;
}

CommonGenerator common_generator(const Subgroup& h, const Rat& x, const Rat& y) {
  require(h.contains(x), Errc::not_a_member, "x = " + x.str() + " is not in the subgroup");
  require(h.contains(y), Errc::not_a_member, "y = " + y.str() + " is not in the subgroup");
  require(x.sign() > 0 && y.sign() > 0, Errc::not_positive, "inputs must be strictly positive");

  // Work in coordinates where the scale is 1: u = x'/a and v = y'/b reduced.
  const Rat u = x / h.scale();
  const Rat v = y / h.scale();
  const int64_t a = u.den(), b = v.den();
  const int64_t g = std::gcd(a, b);
  const Rat z0(g, checked_mul(a, b));
  CommonGenerator out;
  out.n = checked_mul(u.num(), b / g);
  out.m = checked_mul(v.num(), a / g);
  out.z = h.scale() * z0;
  require(h.contains(out.z), Errc::no_witness, "generator escaped the subgroup");
  require(out.z * Rat(out.n) == x && out.z * Rat(out.m) == y, Errc::no_witness,
          "generator does not reproduce the inputs");
  return out;
}

QHom validate_hom(const Subgroup& src, const Subgroup& dst, const Rat& ratio) {
  require(ratio.sign() > 0, Errc::not_positive, "ratio must be strictly positive");
  // Membership of ratio*x is a per-prime valuation condition, so it is enough
  // to test the scale and, per tracked prime, one element at the height cap.
  const Rat scaled = ratio * src.scale();
  require(dst.contains(scaled), Errc::image_escapes_target,
          "image of " + src.scale().str() + " is " + scaled.str() + ", outside the target");
  for (const auto& [prime, height] : src.heights()) {
    if (height.infinite) {
      // Unbounded powers of the prime occur in the source, so the target must
      // be unbounded at this prime as well; otherwise some deep sample
      // escapes, and we report one concretely.
      const auto it = dst.heights().find(prime);
      if (it != dst.heights().end() && it->second.infinite) continue;
      const int64_t dst_cap = it == dst.heights().end() ? 0 : it->second.cap;
      int64_t e = 1, pe = prime;
      Rat witness = src.scale() / Rat(pe);
      while (dst.contains(ratio * witness) && e <= dst_cap + 64) {
        ++e;
        pe = checked_mul(pe, prime);
        witness = src.scale() / Rat(pe);
      }
      fail(Errc::image_escapes_target,
           "image of " + witness.str() + " is " + (ratio * witness).str() +
               ", outside the target");
    }
    int64_t pe = 1;
    for (int64_t e = 0; e < height.cap; ++e) pe = checked_mul(pe, prime);
    const Rat member = src.scale() / Rat(pe);
    require(dst.contains(ratio * member), Errc::image_escapes_target,
            "image of " + member.str() + " is " + (ratio * member).str() +
                ", outside the target");
  }
  return QHom{ratio};
}

int64_t archimedean_witness(const Subgroup& h, const Rat& x, const Rat& y) {
  require(h.contains(x) && h.contains(y), Errc::not_a_member,
          "inputs must be members of the subgroup");
  require(x.sign() > 0 && y.sign() > 0, Errc::not_positive, "inputs must be strictly positive");
  // least N with x <= N*y: ceil(x/y)
  const Rat q = x / y;
  const int64_t n = q.num() / q.den() + (q.num() % q.den() != 0 ? 1 : 0);
  return std::max<int64_t>(n, 1);
}

}  // namespace cyclo
