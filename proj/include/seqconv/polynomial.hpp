#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqconv/rational.hpp"

namespace seqconv {

/// Dense univariate polynomial over Rational, coefficients stored lowest
/// degree first. The zero polynomial is the empty coefficient list; any
/// nonzero polynomial keeps a nonzero trailing (highest-degree) coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
  }
  Polynomial(long long constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial c * x^deg.
  static Polynomial monomial(std::size_t deg, Rational c = Rational(1)) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  const Rational& leading() const {
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  friend Polynomial operator-(const Polynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    const auto& a = p.coeffs_;
    const auto& b = q.coeffs_;
    std::vector<Rational> v(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    const auto& a = p.coeffs_;
    const auto& b = q.coeffs_;
    std::vector<Rational> v(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v;
    v.reserve(p.coeffs_.size());
    for (const auto& a : p.coeffs_) v.push_back(a * c);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  /// Horner evaluation at a rational point.
  Rational eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  Polynomial pow(unsigned long long e) const {
    Polynomial base = *this;
    Polynomial acc(Rational(1));
    while (e > 0) {
      if (e & 1ULL) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// p(c*x): coefficient i picks up a factor c^i. Exact composition with a
  /// linear monomial argument.
  Polynomial scale_arg(const Rational& c) const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    Rational f(1);
    for (const auto& a : coeffs_) {
      v.push_back(a * f);
      f *= c;
    }
    return Polynomial(std::move(v));
  }

  /// Long division over the rational coefficient field: returns (quotient,
  /// remainder) with deg(remainder) < deg(divisor).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                            Rational(0));
    const Rational lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
      const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
      Rational factor = rem.leading() * lead_inv;
      q[shift] = factor;
      rem -= divisor * monomial(shift, factor);
    }
    return {Polynomial(std::move(q)), rem};
  }

  /// Exact quotient; throws if the division leaves a remainder.
  Polynomial div_exact(const Polynomial& divisor) const {
    auto [q, rem] = divmod(divisor);
    if (!rem.is_zero()) throw std::domain_error("Polynomial: division not exact");
    return q;
  }

  /// Coefficient list rendering, lowest degree first: "[0, -3, 0, 4]".
  /// The zero polynomial renders as "[0]".
  std::string str() const {
    if (coeffs_.empty()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += coeffs_[i].str();
    }
    s += "]";
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Rational poly_eval(const Polynomial& p, const Rational& x0) { return p.eval(x0); }

}  // namespace seqconv
