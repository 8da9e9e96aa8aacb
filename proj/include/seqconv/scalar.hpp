#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "seqconv/polynomial.hpp"
#include "seqconv/quadext.hpp"
#include "seqconv/rational.hpp"

namespace seqconv {

enum class ScalarKind { rational, quadratic, polynomial };

inline const char* to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::rational: return "rational";
    case ScalarKind::quadratic: return "quadratic";
    case ScalarKind::polynomial: return "polynomial";
  }
  return "?";
}

/// Tagged union over the three exact scalar domains. Binary operations
/// require matching variants; a Rational mixed with anything else is
/// promoted into the other operand's domain (constant polynomial, or
/// a + 0*sqrt(d) with the partner's radicand). QuadExt and Polynomial
/// never mix.
class ExactScalar {
 public:
  ExactScalar() : v_(Rational(0)) {}
  ExactScalar(Rational r) : v_(std::move(r)) {}
  ExactScalar(long long n) : v_(Rational(n)) {}
  ExactScalar(QuadExt q) : v_(std::move(q)) {}
  ExactScalar(Polynomial p) : v_(std::move(p)) {}

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }

  bool is_zero() const {
    switch (kind()) {
      case ScalarKind::rational: return std::get<Rational>(v_).is_zero();
      case ScalarKind::quadratic: return std::get<QuadExt>(v_).is_zero();
      case ScalarKind::polynomial: return std::get<Polynomial>(v_).is_zero();
    }
    return false;
  }

  const Rational& as_rational() const { return get<Rational>("rational"); }
  const QuadExt& as_quadratic() const { return get<QuadExt>("quadratic"); }
  const Polynomial& as_polynomial() const { return get<Polynomial>("polynomial"); }

  friend ExactScalar operator-(const ExactScalar& x) {
    return std::visit([](const auto& v) { return ExactScalar(-v); }, x.v_);
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    auto [a, b] = promote(x, y);
    return binop(a, b, [](const auto& u, const auto& v) { return u + v; });
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    auto [a, b] = promote(x, y);
    return binop(a, b, [](const auto& u, const auto& v) { return u - v; });
  }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    auto [a, b] = promote(x, y);
    return binop(a, b, [](const auto& u, const auto& v) { return u * v; });
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    auto [a, b] = promote(x, y);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  ExactScalar pow(long long e) const {
    switch (kind()) {
      case ScalarKind::rational: return ExactScalar(std::get<Rational>(v_).pow(e));
      case ScalarKind::quadratic: return ExactScalar(std::get<QuadExt>(v_).pow(e));
      case ScalarKind::polynomial:
        if (e < 0) throw std::domain_error("ExactScalar: negative power of a polynomial");
        return ExactScalar(std::get<Polynomial>(v_).pow(static_cast<unsigned long long>(e)));
    }
    throw std::logic_error("unreachable");
  }

  std::string str() const {
    switch (kind()) {
      case ScalarKind::rational: return std::get<Rational>(v_).str();
      case ScalarKind::quadratic: return std::get<QuadExt>(v_).str();
      case ScalarKind::polynomial: return std::get<Polynomial>(v_).str();
    }
    return "?";
  }

  /// Exact quotient x / y within whatever domain the pair promotes to.
  /// Polynomial division must leave no remainder.
  friend ExactScalar div_exact(const ExactScalar& x, const ExactScalar& y) {
    auto [a, b] = promote(x, y);
    switch (a.kind()) {
      case ScalarKind::rational:
        return ExactScalar(std::get<Rational>(a.v_) / std::get<Rational>(b.v_));
      case ScalarKind::quadratic:
        return ExactScalar(std::get<QuadExt>(a.v_) / std::get<QuadExt>(b.v_));
      case ScalarKind::polynomial:
        return ExactScalar(std::get<Polynomial>(a.v_).div_exact(std::get<Polynomial>(b.v_)));
    }
    throw std::logic_error("unreachable");
  }

 private:
  template <typename T>
  const T& get(const char* want) const {
    if (!std::holds_alternative<T>(v_))
      throw std::invalid_argument(std::string("ExactScalar: expected ") + want + " variant, have " +
                                  to_string(kind()));
    return std::get<T>(v_);
  }

  template <typename F>
  static ExactScalar binop(const ExactScalar& a, const ExactScalar& b, F op) {
    switch (a.kind()) {
      case ScalarKind::rational:
        return ExactScalar(op(std::get<Rational>(a.v_), std::get<Rational>(b.v_)));
      case ScalarKind::quadratic:
        return ExactScalar(op(std::get<QuadExt>(a.v_), std::get<QuadExt>(b.v_)));
      case ScalarKind::polynomial:
        return ExactScalar(op(std::get<Polynomial>(a.v_), std::get<Polynomial>(b.v_)));
    }
    throw std::logic_error("unreachable");
  }

  // Lift a Rational into the partner's variant; reject QuadExt/Polynomial mixes.
  static std::pair<ExactScalar, ExactScalar> promote(const ExactScalar& x, const ExactScalar& y) {
    if (x.kind() == y.kind()) return {x, y};
    if (x.kind() == ScalarKind::rational) {
      auto p = promote(y, x);
      return {p.second, p.first};
    }
    if (y.kind() != ScalarKind::rational)
      throw std::invalid_argument(std::string("ExactScalar: incompatible variants (") +
                                  to_string(x.kind()) + " vs " + to_string(y.kind()) + ")");
    const Rational& r = std::get<Rational>(y.v_);
    if (x.kind() == ScalarKind::quadratic) {
      const QuadExt& q = std::get<QuadExt>(x.v_);
      return {x, ExactScalar(QuadExt(r, Rational(0), q.d()))};
    }
    return {x, ExactScalar(Polynomial(r))};
  }

  std::variant<Rational, QuadExt, Polynomial> v_;
};

/// sum_{k=0}^{n} x^k z^{n-k}, evaluated through the closed form
/// (x^{n+1} - z^{n+1}) / (x - z), with the coincident case x = z taking the
/// limit value (n+1) x^n.
inline ExactScalar geom_ratio_sum(const ExactScalar& x, const ExactScalar& z, long long n) {
  if (n < 0) throw std::invalid_argument("geom_ratio_sum: n must be >= 0");
  if (x == z) return x.pow(n) * ExactScalar(n + 1);
  return div_exact(x.pow(n + 1) - z.pow(n + 1), x - z);
}

}  // namespace seqconv
