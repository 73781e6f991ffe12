#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace cyclo {

/// Exact rational on int64 with overflow-checked arithmetic; always stored
/// reduced with a positive denominator.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(int64_t num, int64_t den = 1) : num_(num), den_(den) { normalize(); }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.num_ != 0, Errc::invalid_argument, "division by zero");
    return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p/q" or "p"; rejects zero denominators.
  static Rat parse(const std::string& text);

 private:
  using i128 = __int128;
  static i128 wide(int64_t v) { return static_cast<i128>(v); }

  static int64_t narrow(i128 v) {
    require(v <= static_cast<i128>(INT64_MAX) && v >= static_cast<i128>(INT64_MIN),
            Errc::overflow, "rational arithmetic overflow");
    return static_cast<int64_t>(v);
  }

  static Rat make(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rat r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    require(den_ != 0, Errc::invalid_argument, "zero denominator");
    if (den_ < 0) {
      require(num_ != INT64_MIN && den_ != INT64_MIN, Errc::overflow, "rational overflow");
      num_ = -num_;
      den_ = -den_;
    }
    const int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  int64_t num_;
  int64_t den_;
};

inline Rat Rat::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      const int64_t v = std::stoll(text, &used);
      require(used == text.size(), Errc::parse_error, "trailing characters in rational");
      return Rat(v);
    }
    const int64_t p = std::stoll(text.substr(0, slash), &used);
    require(used == slash, Errc::parse_error, "bad numerator");
    const std::string den_text = text.substr(slash + 1);
    const int64_t q = std::stoll(den_text, &used);
    require(used == den_text.size(), Errc::parse_error, "bad denominator");
    return Rat(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "cannot parse rational '" + text + "'");
  }
}

}  // namespace cyclo
