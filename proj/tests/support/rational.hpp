#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace inconic::testing {

/// Exact fraction over int64 with overflow checks; enough for hand-sized values.
class Rational {
 public:
  Rational(std::int64_t n = 0) : num_(n), den_(1) {}  // NOLINT: implicit by design of the tests
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(Rational a, Rational b) {
    return make(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
  }
  friend Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }
  friend Rational operator*(Rational a, Rational b) {
    return make(mul(a.num_, b.num_), mul(a.den_, b.den_));
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return make(mul(a.num_, b.den_), mul(a.den_, b.num_));
  }
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(Rational a, Rational b) { return (a - b).num_ < 0; }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend std::ostream& operator<<(std::ostream& os, Rational r) {
    return os << r.num_ << '/' << r.den_;
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  static __int128 mul(__int128 a, __int128 b) { return a * b; }
  static __int128 add(__int128 a, __int128 b) { return a + b; }

  void reduce() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    *this = make(num_, den_);
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace inconic::testing
