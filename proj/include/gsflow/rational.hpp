#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsflow {

/// Exact rational number over 64-bit integers.
///
/// Always stored in lowest terms with a positive denominator. Every
/// operation is exact; intermediate products run in 128-bit arithmetic and
/// an std::overflow_error is thrown if a reduced result leaves the 64-bit
/// range. All monetary quantities in this library (values, prices, net
/// utilities) are Rationals; no floating point is used anywhere.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

  Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("rational negate overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return make(i128(a.num_) + b.num_, a.den_);
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return make(i128(a.num_) - b.num_, a.den_);
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // cross products of values < 2^63 fit comfortably in 128 bits
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "123", "-7" or "num/den". Throws std::invalid_argument on
  /// anything else (including decimals and a zero denominator).
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      d = 1;
    } else if (d != 1) {
      i128 g = gcd128(n, d);
      n /= g;
      d /= g;
    }
    if (n < INT64_MIN || n > INT64_MAX || d > INT64_MAX)
      throw std::overflow_error("rational overflow: " + width_note(n, d));
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static std::string width_note(i128 n, i128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gsflow
