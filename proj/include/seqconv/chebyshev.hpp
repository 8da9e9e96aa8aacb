#pragma once

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "seqconv/polynomial.hpp"
#include "seqconv/rational.hpp"

namespace seqconv {

/// First kind t_n (t_0 = 1, t_1 = x) or second kind u_n (u_0 = 1, u_1 = 2x),
/// both satisfying p_{n+1} = 2x * p_n - p_{n-1}.
enum class ChebKind { first, second };

/// Exact-coefficient Chebyshev polynomials for all integer indices, with the
/// conventions the backward recurrence forces: t_{-n} = t_n, u_{-1} = 0,
/// u_{-n} = -u_{n-2}. Results are memoized per kind; the cache is
/// mutex-guarded so one instance serves concurrent workers.
class ChebCache {
 public:
  ChebCache() {
    t_.push_back(Polynomial(1));
    t_.push_back(Polynomial::x());
    u_.push_back(Polynomial(1));
    u_.push_back(Polynomial::monomial(1, Rational(2)));
  }

  Polynomial at(ChebKind kind, long long n) const {
    if (n < 0) {
      if (kind == ChebKind::first) return at(kind, -n);
      if (n == -1) return Polynomial();
      return -at(ChebKind::second, -n - 2);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto& list = kind == ChebKind::first ? t_ : u_;
    const Polynomial two_x = Polynomial::monomial(1, Rational(2));
    while (static_cast<long long>(list.size()) <= n) {
      const std::size_t m = list.size();
      list.push_back(two_x * list[m - 1] - list[m - 2]);
    }
    return list[static_cast<std::size_t>(n)];
  }

 private:
  mutable std::vector<Polynomial> t_;
  mutable std::vector<Polynomial> u_;
  mutable std::mutex mu_;
};

/// Shared process-wide cache behind cheb_poly.
inline const ChebCache& cheb_cache() {
  static ChebCache cache;
  return cache;
}

inline Polynomial cheb_poly(ChebKind kind, long long n) { return cheb_cache().at(kind, n); }

/// Checks t_n = (u_n - u_{n-2}) / 2 as an exact polynomial identity.
inline bool cheb_tu_relation_check(long long n) {
  if (n < 0) throw std::invalid_argument("cheb_tu_relation_check: n must be >= 0");
  const Rational half(BigInt(1), BigInt(2));
  return cheb_poly(ChebKind::first, n) ==
         (cheb_poly(ChebKind::second, n) - cheb_poly(ChebKind::second, n - 2)) * half;
}

}  // namespace seqconv
