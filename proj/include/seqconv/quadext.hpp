#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "seqconv/rational.hpp"

namespace seqconv {

/// Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)).
///
/// The radicand d is pinned per value and must not be the square of a
/// rational: a square d would collapse the extension onto Q itself and
/// break the zero-divisor argument behind inversion (a^2 - d*b^2 = 0 then
/// no longer forces a = b = 0). Arithmetic between two values requires
/// equal radicands; mixing them is an error, never an implicit embedding.
class QuadExt {
 public:
  QuadExt(Rational a, Rational b, Rational d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (is_rational_square(d_))
      throw std::invalid_argument("QuadExt: radicand " + d_.str() + " is a rational square");
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }

  friend QuadExt operator-(const QuadExt& u) { return QuadExt(-u.a_, -u.b_, u.d_); }

  friend QuadExt operator+(const QuadExt& u, const QuadExt& v) {
    check_same_radicand(u, v);
    return QuadExt(u.a_ + v.a_, u.b_ + v.b_, u.d_);
  }
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v) {
    check_same_radicand(u, v);
    return QuadExt(u.a_ - v.a_, u.b_ - v.b_, u.d_);
  }
  // (a1 + b1 sqrt(d))(a2 + b2 sqrt(d)) = (a1 a2 + b1 b2 d) + (a1 b2 + b1 a2) sqrt(d)
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v) {
    check_same_radicand(u, v);
    return QuadExt(u.a_ * v.a_ + u.b_ * v.b_ * u.d_, u.a_ * v.b_ + u.b_ * v.a_, u.d_);
  }

  friend QuadExt operator+(const QuadExt& u, const Rational& r) {
    return QuadExt(u.a_ + r, u.b_, u.d_);
  }
  friend QuadExt operator*(const QuadExt& u, const Rational& r) {
    return QuadExt(u.a_ * r, u.b_ * r, u.d_);
  }

  /// Multiplicative inverse via the conjugate: 1/u = conj(u) / norm(u) where
  /// norm(u) = a^2 - d*b^2 is nonzero for every nonzero u (d non-square).
  QuadExt inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("QuadExt: zero has no inverse");
    return QuadExt(a_ / n, -b_ / n, d_);
  }

  friend QuadExt operator/(const QuadExt& u, const QuadExt& v) { return u * v.inverse(); }

  Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

  QuadExt pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadExt base = *this;
    QuadExt acc(Rational(1), Rational(0), d_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const QuadExt& u, const QuadExt& v) {
    return u.d_ == v.d_ && u.a_ == v.a_ && u.b_ == v.b_;
  }
  friend bool operator!=(const QuadExt& u, const QuadExt& v) { return !(u == v); }

  std::string str() const {
    return a_.str() + " + " + b_.str() + "*sqrt(" + d_.str() + ")";
  }

 private:
  static void check_same_radicand(const QuadExt& u, const QuadExt& v) {
    if (u.d_ != v.d_)
      throw std::invalid_argument("QuadExt: radicand mismatch (" + u.d_.str() + " vs " +
                                  v.d_.str() + ")");
  }

  Rational a_;
  Rational b_;
  Rational d_;
};

inline QuadExt quad_mul(const QuadExt& u, const QuadExt& v) { return u * v; }
inline QuadExt quad_inv(const QuadExt& u) { return u.inverse(); }

}  // namespace seqconv
