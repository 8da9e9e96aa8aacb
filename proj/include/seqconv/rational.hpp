#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace seqconv {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator, so equality is plain structural comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator-(const Rational& x) {
    return Rational(-x.num_, x.den_, raw_tag{});
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == 1 && y.den_ == 1) return Rational(x.num_ + y.num_, BigInt(1), raw_tag{});
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    if (x.den_ == 1 && y.den_ == 1) return Rational(x.num_ - y.num_, BigInt(1), raw_tag{});
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    if (x.den_ == 1 && y.den_ == 1) return Rational(x.num_ * y.num_, BigInt(1), raw_tag{});
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: zero has no inverse");
    return Rational(den_, num_);
  }

  /// x^e for any integer e; negative exponents invert (x must be nonzero).
  Rational pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = Rational(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

 private:
  struct raw_tag {};
  // Trusted already-canonical input.
  Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  BigInt s = boost::multiprecision::sqrt(x);
  return s * s == x;
}

/// True iff x is the square of a rational: numerator and denominator of the
/// reduced form must each be perfect squares.
inline bool is_rational_square(const Rational& x) {
  return is_perfect_square(x.num()) && is_perfect_square(x.den());
}

/// Exact square root of a rational square; throws otherwise.
inline Rational rational_sqrt(const Rational& x) {
  if (!is_rational_square(x)) throw std::domain_error("rational_sqrt: not a rational square");
  return Rational(boost::multiprecision::sqrt(x.num()), boost::multiprecision::sqrt(x.den()));
}

}  // namespace seqconv
