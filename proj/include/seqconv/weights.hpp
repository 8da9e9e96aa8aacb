#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqconv/chebyshev.hpp"
#include "seqconv/horadam.hpp"
#include "seqconv/polynomial.hpp"
#include "seqconv/scalar.hpp"

namespace seqconv {

/// Binomial coefficient by Pascal-triangle recurrence on unbounded integers.
/// Out-of-range k yields 0.
inline BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return BigInt(0);
  static std::vector<std::vector<BigInt>> rows;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long long>(rows.size()) <= n) {
    const std::size_t m = rows.size();
    std::vector<BigInt> row(m + 1, BigInt(1));
    for (std::size_t j = 1; j < m; ++j) row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Bernoulli polynomial B_m(x) via the recurrence
/// B_m(x) = x^m - (1/(m+1)) * sum_{k=0}^{m-1} C(m+1, k) B_k(x).
inline Polynomial bernoulli_poly(long long m) {
  if (m < 0) throw std::invalid_argument("bernoulli_poly: m must be >= 0");
  static std::vector<Polynomial> memo = {Polynomial(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long long>(memo.size()) <= m) {
    const long long j = static_cast<long long>(memo.size());
    Polynomial acc;
    for (long long k = 0; k < j; ++k) acc += memo[static_cast<std::size_t>(k)] * Rational(binomial(j + 1, k));
    memo.push_back(Polynomial::monomial(static_cast<std::size_t>(j)) -
                   acc * Rational(BigInt(1), BigInt(j + 1)));
  }
  return memo[static_cast<std::size_t>(m)];
}

/// Evaluation context a weight family may need: the stride r for
/// sequence-indexed weights, and the Lucas pair (U, V with their p, q)
/// behind the U*U / V*V families. Chebyshev-polynomial weights draw from
/// the shared cheb cache and only need r.
struct WeightContext {
  std::optional<long long> r;
  std::shared_ptr<HoradamSeq> lucas_u;
  std::shared_ptr<HoradamSeq> lucas_v;
  std::optional<Rational> p;
  std::optional<Rational> q;
};

inline WeightContext weight_context_with_r(long long r) {
  WeightContext ctx;
  ctx.r = r;
  return ctx;
}

inline WeightContext weight_context_for_pair(long long r, const Rational& p, const Rational& q) {
  WeightContext ctx;
  ctx.r = r;
  ctx.p = p;
  ctx.q = q;
  ctx.lucas_u = std::make_shared<HoradamSeq>(lucas_u_params(p, q));
  ctx.lucas_v = std::make_shared<HoradamSeq>(lucas_v_params(p, q));
  return ctx;
}

/// A symmetric weight T(n, k) = T(n, n-k), optionally carrying a closed form
/// for the row sum sum_{k=0}^n T(n, k). The closed form returns nullopt when
/// its printed formula divides by something that vanishes in this context;
/// callers then fall back to the brute-force row sum.
struct WeightFamily {
  std::string name;
  bool needs_r = false;
  bool needs_lucas_pair = false;
  std::function<bool(long long n)> domain;  // n-domain of the family
  std::function<ExactScalar(const WeightContext&, long long n, long long k)> value;
  std::function<std::optional<ExactScalar>(const WeightContext&, long long n)> closed_sum;
};

inline void require_context(const WeightFamily& family, const WeightContext& ctx) {
  if (family.needs_r && !ctx.r)
    throw std::invalid_argument("weight '" + family.name + "': context is missing r");
  if (family.needs_lucas_pair && (!ctx.lucas_u || !ctx.lucas_v || !ctx.p || !ctx.q))
    throw std::invalid_argument("weight '" + family.name + "': context is missing the Lucas pair");
}

inline ExactScalar weight_value(const WeightFamily& family, const WeightContext& ctx, long long n,
                                long long k) {
  if (k < 0 || k > n)
    throw std::out_of_range("weight '" + family.name + "': k outside [0, n]");
  if (!family.domain(n))
    throw std::domain_error("weight '" + family.name + "': n outside family domain");
  require_context(family, ctx);
  return family.value(ctx, n, k);
}

/// Brute-force row sum; the independent side of every closed-form check.
inline ExactScalar weight_row_sum_brute(const WeightFamily& family, const WeightContext& ctx,
                                        long long n) {
  ExactScalar acc;
  for (long long k = 0; k <= n; ++k) acc += weight_value(family, ctx, n, k);
  return acc;
}

inline ExactScalar weight_sum_closed(const WeightFamily& family, const WeightContext& ctx,
                                     long long n) {
  if (!family.closed_sum)
    throw std::invalid_argument("weight '" + family.name + "': no closed-form row sum");
  if (!family.domain(n))
    throw std::domain_error("weight '" + family.name + "': n outside family domain");
  require_context(family, ctx);
  auto s = family.closed_sum(ctx, n);
  if (!s)
    throw std::domain_error("weight '" + family.name +
                            "': closed form undefined here (vanishing divisor)");
  return *s;
}

namespace detail {

inline std::function<bool(long long)> all_n() {
  return [](long long n) { return n >= 0; };
}

}  // namespace detail

/// The registered weight families. Names are stable identifiers used by the
/// identity catalog and the reports.
inline std::vector<WeightFamily> standard_weight_families() {
  using detail::all_n;
  std::vector<WeightFamily> fams;

  fams.push_back(WeightFamily{
      "const_one", false, false, all_n(),
      [](const WeightContext&, long long, long long) { return ExactScalar(1); },
      [](const WeightContext&, long long n) {
        return std::optional<ExactScalar>(ExactScalar(n + 1));
      }});

  fams.push_back(WeightFamily{
      "k_nk", false, false, all_n(),
      [](const WeightContext&, long long n, long long k) { return ExactScalar(k * (n - k)); },
      [](const WeightContext&, long long n) {
        // sum k(n-k) = (n-1)n(n+1)/6
        return std::optional<ExactScalar>(
            ExactScalar(Rational(BigInt(n - 1) * n * (n + 1), BigInt(6))));
      }});

  fams.push_back(WeightFamily{
      "k2_nk2", false, false, all_n(),
      [](const WeightContext&, long long n, long long k) {
        const BigInt t = BigInt(k) * (n - k);
        return ExactScalar(Rational(t * t));
      },
      [](const WeightContext&, long long n) {
        // sum k^2(n-k)^2 = n(n^4-1)/30
        const BigInt nn(n);
        return std::optional<ExactScalar>(
            ExactScalar(Rational(nn * (nn * nn * nn * nn - 1), BigInt(30))));
      }});

  fams.push_back(WeightFamily{
      "binom", false, false, all_n(),
      [](const WeightContext&, long long n, long long k) {
        return ExactScalar(Rational(binomial(n, k)));
      },
      [](const WeightContext&, long long n) {
        return std::optional<ExactScalar>(ExactScalar(Rational(2).pow(n)));
      }});

  fams.push_back(WeightFamily{
      "binom_sq", false, false, all_n(),
      [](const WeightContext&, long long n, long long k) {
        const BigInt c = binomial(n, k);
        return ExactScalar(Rational(c * c));
      },
      [](const WeightContext&, long long n) {
        return std::optional<ExactScalar>(ExactScalar(Rational(binomial(2 * n, n))));
      }});

  // The printed closed form 2^{2n-1} fails at n = 0 (direct sum is 1, the
  // formula gives 1/2), so this family's domain starts at n = 1.
  fams.push_back(WeightFamily{
      "binom_2n_2k", false, false, [](long long n) { return n >= 1; },
      [](const WeightContext&, long long n, long long k) {
        return ExactScalar(Rational(binomial(2 * n, 2 * k)));
      },
      [](const WeightContext&, long long n) {
        return std::optional<ExactScalar>(ExactScalar(Rational(2).pow(2 * n - 1)));
      }});

  fams.push_back(WeightFamily{
      "binom_3n_3k", false, false, all_n(),
      [](const WeightContext&, long long n, long long k) {
        return ExactScalar(Rational(binomial(3 * n, 3 * k)));
      },
      [](const WeightContext&, long long n) {
        // sum C(3n,3k) = (2/3)(2^{3n-1} + (-1)^n); at n = 0 the first power
        // is the rational 1/2.
        const Rational val = Rational(BigInt(2), BigInt(3)) *
                             (Rational(2).pow(3 * n - 1) + Rational(-1).pow(n));
        return std::optional<ExactScalar>(ExactScalar(val));
      }});

  fams.push_back(WeightFamily{
      "bernoulli", false, false, all_n(),
      [](const WeightContext&, long long n, long long k) {
        return ExactScalar(Rational(binomial(n, k)) * bernoulli_poly(k) * bernoulli_poly(n - k));
      },
      [](const WeightContext&, long long n) {
        // Agoh-Dilcher: sum C(n,k) B_k(x) B_{n-k}(x)
        //   = n(2x-1) B_{n-1}(2x) - (n-1) B_n(2x); the n = 0 row sum is 1.
        if (n == 0) return std::optional<ExactScalar>(ExactScalar(Polynomial(1)));
        const Rational two(2);
        const Polynomial lhs1 = Polynomial(std::vector<Rational>{Rational(-1), Rational(2)}) *
                                bernoulli_poly(n - 1).scale_arg(two) * Rational(n);
        const Polynomial lhs2 = bernoulli_poly(n).scale_arg(two) * Rational(n - 1);
        return std::optional<ExactScalar>(ExactScalar(lhs1 - lhs2));
      }});

  fams.push_back(WeightFamily{
      "lucas_uu", true, true, all_n(),
      [](const WeightContext& ctx, long long n, long long k) {
        const long long r = *ctx.r;
        return ExactScalar(ctx.lucas_u->at(r * k) * ctx.lucas_u->at(r * (n - k)));
      },
      [](const WeightContext& ctx, long long n) -> std::optional<ExactScalar> {
        // Delta * U_r * sum U_{rk} U_{r(n-k)} = (n+1) U_r V_{rn} - 2 U_{r(n+1)}
        const long long r = *ctx.r;
        const Rational delta = *ctx.p * *ctx.p - Rational(4) * *ctx.q;
        const Rational ur = ctx.lucas_u->at(r);
        const Rational div = delta * ur;
        if (div.is_zero()) return std::nullopt;
        const Rational num = Rational(n + 1) * ur * ctx.lucas_v->at(r * n) -
                             Rational(2) * ctx.lucas_u->at(r * (n + 1));
        return ExactScalar(num / div);
      }});

  fams.push_back(WeightFamily{
      "lucas_vv", true, true, all_n(),
      [](const WeightContext& ctx, long long n, long long k) {
        const long long r = *ctx.r;
        return ExactScalar(ctx.lucas_v->at(r * k) * ctx.lucas_v->at(r * (n - k)));
      },
      [](const WeightContext& ctx, long long n) -> std::optional<ExactScalar> {
        // U_r * sum V_{rk} V_{r(n-k)} = (n+1) U_r V_{rn} + 2 U_{r(n+1)}
        const long long r = *ctx.r;
        const Rational ur = ctx.lucas_u->at(r);
        if (ur.is_zero()) return std::nullopt;
        const Rational num = Rational(n + 1) * ur * ctx.lucas_v->at(r * n) +
                             Rational(2) * ctx.lucas_u->at(r * (n + 1));
        return ExactScalar(num / ur);
      }});

  fams.push_back(WeightFamily{
      "cheb_tt", true, false, all_n(),
      [](const WeightContext& ctx, long long n, long long k) {
        const long long r = *ctx.r;
        return ExactScalar(cheb_poly(ChebKind::first, r * k) *
                           cheb_poly(ChebKind::first, r * (n - k)));
      },
      [](const WeightContext& ctx, long long n) -> std::optional<ExactScalar> {
        // 2 u_{r-1} * sum t_{rk} t_{r(n-k)} = (n+1) u_{r-1} t_{rn} + u_{rn+r-1}
        const long long r = *ctx.r;
        const Polynomial u_r1 = cheb_poly(ChebKind::second, r - 1);
        if (u_r1.is_zero()) return std::nullopt;
        const Polynomial num = u_r1 * cheb_poly(ChebKind::first, r * n) * Rational(n + 1) +
                               cheb_poly(ChebKind::second, r * n + r - 1);
        return ExactScalar(num.div_exact(u_r1 * Rational(2)));
      }});

  fams.push_back(WeightFamily{
      "cheb_uu", true, false, all_n(),
      [](const WeightContext& ctx, long long n, long long k) {
        const long long r = *ctx.r;
        return ExactScalar(cheb_poly(ChebKind::second, r * k) *
                           cheb_poly(ChebKind::second, r * (n - k)));
      },
      [](const WeightContext& ctx, long long n) -> std::optional<ExactScalar> {
        // 2 (x^2-1) u_{r-1} * sum u_{rk} u_{r(n-k)}
        //   = (n+1) u_{r-1} t_{rn+2} - u_{rn+r-1}
        const long long r = *ctx.r;
        const Polynomial u_r1 = cheb_poly(ChebKind::second, r - 1);
        if (u_r1.is_zero()) return std::nullopt;
        const Polynomial x2m1(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
        const Polynomial num = u_r1 * cheb_poly(ChebKind::first, r * n + 2) * Rational(n + 1) -
                               cheb_poly(ChebKind::second, r * n + r - 1);
        return ExactScalar(num.div_exact(x2m1 * u_r1 * Rational(2)));
      }});

  return fams;
}

inline const std::vector<WeightFamily>& weight_registry() {
  static const std::vector<WeightFamily> fams = standard_weight_families();
  return fams;
}

inline const WeightFamily& weight_family(std::string_view name) {
  for (const auto& f : weight_registry())
    if (f.name == name) return f;
  throw std::invalid_argument("weight_family: unknown family '" + std::string(name) + "'");
}

}  // namespace seqconv
