#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqconv/quadext.hpp"
#include "seqconv/rational.hpp"

namespace seqconv {

/// Parameter quadruple (a, b; p, q) of the second-order recurrence
/// w_0 = a, w_1 = b, w_n = p*w_{n-1} - q*w_{n-2}. Both p and q must be
/// nonzero; q = 0 would make negative indices undefined.
struct HoradamParams {
  Rational a;
  Rational b;
  Rational p;
  Rational q;

  HoradamParams(Rational a_, Rational b_, Rational p_, Rational q_)
      : a(std::move(a_)), b(std::move(b_)), p(std::move(p_)), q(std::move(q_)) {
    if (p.is_zero() || q.is_zero())
      throw std::invalid_argument("HoradamParams: p and q must be nonzero");
  }

  Rational discriminant() const { return p * p - Rational(4) * q; }
};

/// Memoizing evaluator of a Horadam sequence over all integer indices.
/// Forward recurrence for n >= 2, backward formula
/// w_{-n} = (p*w_{-n+1} - w_{-n+2}) / q for n < 0. The cache grows
/// contiguously from the seed pair toward the requested index and is
/// mutex-guarded, so one instance may be shared between workers.
class HoradamSeq {
 public:
  explicit HoradamSeq(HoradamParams params) : params_(std::move(params)) {
    fwd_.push_back(params_.a);
    fwd_.push_back(params_.b);
  }

  const HoradamParams& params() const { return params_; }

  Rational at(long long n) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (n >= 0) {
      while (static_cast<long long>(fwd_.size()) <= n) {
        const std::size_t m = fwd_.size();
        fwd_.push_back(params_.p * fwd_[m - 1] - params_.q * fwd_[m - 2]);
      }
      return fwd_[static_cast<std::size_t>(n)];
    }
    // bwd_[i] holds w_{-1-i}
    const std::size_t want = static_cast<std::size_t>(-n - 1);
    while (bwd_.size() <= want) {
      const Rational& w1 = bwd_.empty() ? fwd_[0] : bwd_.back();          // w_{m+1}
      const Rational& w2 = bwd_.size() < 2 ? fwd_[1 - bwd_.size()] : bwd_[bwd_.size() - 2];  // w_{m+2}
      bwd_.push_back((params_.p * w1 - w2) / params_.q);
    }
    return bwd_[want];
  }

 private:
  HoradamParams params_;
  mutable std::vector<Rational> fwd_;
  mutable std::vector<Rational> bwd_;
  mutable std::mutex mu_;
};

inline HoradamParams lucas_u_params(const Rational& p, const Rational& q) {
  return HoradamParams(Rational(0), Rational(1), p, q);
}
inline HoradamParams lucas_v_params(const Rational& p, const Rational& q) {
  return HoradamParams(Rational(2), p, p, q);
}

/// One-shot evaluation of the Lucas sequence of the first kind U(p, q).
inline Rational lucas_u_at(const Rational& p, const Rational& q, long long n) {
  return HoradamSeq(lucas_u_params(p, q)).at(n);
}
/// One-shot evaluation of the Lucas sequence of the second kind V(p, q).
inline Rational lucas_v_at(const Rational& p, const Rational& q, long long n) {
  return HoradamSeq(lucas_v_params(p, q)).at(n);
}

enum class NamedSequence {
  fibonacci,
  lucas,
  pell,
  pell_lucas,
  jacobsthal,
  jacobsthal_lucas,
  balancing,
  lucas_balancing,
};

inline constexpr std::array<std::string_view, 8> named_sequence_names = {
    "fibonacci",        "lucas",     "pell",      "pell_lucas",
    "jacobsthal",       "jacobsthal_lucas", "balancing", "lucas_balancing",
};

inline HoradamParams named_params(NamedSequence s) {
  switch (s) {
    case NamedSequence::fibonacci:        return HoradamParams(0, 1, 1, -1);
    case NamedSequence::lucas:            return HoradamParams(2, 1, 1, -1);
    case NamedSequence::pell:             return HoradamParams(0, 1, 2, -1);
    case NamedSequence::pell_lucas:       return HoradamParams(2, 2, 2, -1);
    case NamedSequence::jacobsthal:       return HoradamParams(0, 1, 1, -2);
    case NamedSequence::jacobsthal_lucas: return HoradamParams(2, 1, 1, -2);
    case NamedSequence::balancing:        return HoradamParams(0, 1, 6, 1);
    case NamedSequence::lucas_balancing:  return HoradamParams(1, 3, 6, 1);
  }
  throw std::invalid_argument("named_params: bad enum value");
}

inline std::shared_ptr<HoradamSeq> make_named(NamedSequence s) {
  return std::make_shared<HoradamSeq>(named_params(s));
}

inline std::shared_ptr<HoradamSeq> make_named(std::string_view name) {
  for (std::size_t i = 0; i < named_sequence_names.size(); ++i)
    if (name == named_sequence_names[i]) return make_named(static_cast<NamedSequence>(i));
  throw std::invalid_argument("make_named: unknown sequence name '" + std::string(name) + "'");
}

inline Rational horadam_at(const HoradamSeq& seq, long long n) { return seq.at(n); }

/// Binet-form evaluation of w_n for n >= 0 through the characteristic roots
/// alpha, beta = (p +- sqrt(Delta))/2. For a rational-square Delta the roots
/// are rational and the computation stays in Q; otherwise it runs in
/// Q(sqrt(Delta)) and the sqrt component of the result must cancel to zero.
/// Delta = 0 (coincident roots) is rejected.
inline Rational binet_at(const HoradamParams& params, long long n) {
  if (n < 0) throw std::invalid_argument("binet_at: n must be >= 0");
  const Rational delta = params.discriminant();
  if (delta.is_zero())
    throw std::domain_error("binet_at: degenerate discriminant p^2 - 4q = 0");
  const Rational half(BigInt(1), BigInt(2));
  if (is_rational_square(delta)) {
    const Rational s = rational_sqrt(delta);
    const Rational alpha = (params.p + s) * half;
    const Rational beta = (params.p - s) * half;
    const Rational coef_a = (params.b - params.a * beta) / s;
    const Rational coef_b = (params.a * alpha - params.b) / s;
    return coef_a * alpha.pow(n) + coef_b * beta.pow(n);
  }
  const QuadExt root(Rational(0), Rational(1), delta);  // sqrt(Delta)
  const QuadExt alpha = (root + params.p) * half;
  const QuadExt beta = (-root + params.p) * half;
  const QuadExt a_q(params.a, Rational(0), delta);
  const QuadExt b_q(params.b, Rational(0), delta);
  const QuadExt inv_root = root.inverse();
  const QuadExt coef_a = (b_q - a_q * beta) * inv_root;
  const QuadExt coef_b = (a_q * alpha - b_q) * inv_root;
  const QuadExt w = coef_a * alpha.pow(n) + coef_b * beta.pow(n);
  if (!w.b().is_zero())
    throw std::logic_error("binet_at: sqrt component failed to cancel");
  return w.a();
}

}  // namespace seqconv
