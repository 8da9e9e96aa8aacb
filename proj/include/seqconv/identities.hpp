#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "seqconv/chebyshev.hpp"
#include "seqconv/horadam.hpp"
#include "seqconv/scalar.hpp"
#include "seqconv/weights.hpp"

namespace seqconv {

using SeqFn = std::function<ExactScalar(long long)>;
using RationalSeqFn = std::function<Rational(long long)>;

inline SeqFn seq_fn(std::shared_ptr<HoradamSeq> seq) {
  return [seq = std::move(seq)](long long i) { return ExactScalar(seq->at(i)); };
}
inline RationalSeqFn rational_seq_fn(std::shared_ptr<HoradamSeq> seq) {
  return [seq = std::move(seq)](long long i) { return seq->at(i); };
}
inline SeqFn cheb_fn(ChebKind kind) {
  return [kind](long long i) { return ExactScalar(cheb_poly(kind, i)); };
}

/// The brute-force convolution oracle: sum_{k=0}^{n} f(rk) * g(r(n-k)) by
/// direct summation. Every identity's left-hand side runs through here (or
/// its weighted sibling below); no closed form ever feeds another's check.
inline ExactScalar convolve(const SeqFn& f, const SeqFn& g, long long r, long long n) {
  if (n < 0) throw std::invalid_argument("convolve: n must be >= 0");
  ExactScalar acc;
  for (long long k = 0; k <= n; ++k) acc += f(r * k) * g(r * (n - k));
  return acc;
}

/// sum_{k=0}^{n} T(n,k) * f(rk) * g(r(n-k)) by direct summation.
inline ExactScalar weighted_convolve(const WeightFamily& w, const WeightContext& ctx,
                                     const SeqFn& f, const SeqFn& g, long long r, long long n) {
  if (n < 0) throw std::invalid_argument("weighted_convolve: n must be >= 0");
  ExactScalar acc;
  for (long long k = 0; k <= n; ++k)
    acc += weight_value(w, ctx, n, k) * f(r * k) * g(r * (n - k));
  return acc;
}

/// gamma(r) = q_X^{2r} + q_Y^{2r} - (q_X^r + q_Y^r) V_{X,r} V_{Y,r}
///          + q_X^r V_{Y,2r} + q_Y^r V_{X,r}^2.
/// Zero is a legal value; callers treat it as a domain skip, never an error.
inline Rational gamma_general(const Rational& q_x, const Rational& q_y, const RationalSeqFn& v_x,
                              const RationalSeqFn& v_y, long long r) {
  const Rational qxr = q_x.pow(r);
  const Rational qyr = q_y.pow(r);
  const Rational vxr = v_x(r);
  const Rational vyr = v_y(r);
  return qxr * qxr + qyr * qyr - (qxr + qyr) * vxr * vyr + qxr * v_y(2 * r) + qyr * vxr * vxr;
}

/// A Horadam sequence bundled with its associated second-kind Lucas sequence
/// V(p, q) and the parameter q, which is everything the general convolution
/// closed form consumes.
struct HoradamWithV {
  std::shared_ptr<HoradamSeq> seq;
  std::shared_ptr<HoradamSeq> v;
  Rational q;
};

inline HoradamWithV with_associated_v(std::shared_ptr<HoradamSeq> seq) {
  const auto& pr = seq->params();
  return HoradamWithV{seq, std::make_shared<HoradamSeq>(lucas_v_params(pr.p, pr.q)), pr.q};
}

inline Rational gamma_general(const HoradamWithV& x, const HoradamWithV& y, long long r) {
  return gamma_general(x.q, y.q, rational_seq_fn(x.v), rational_seq_fn(y.v), r);
}

/// The four-term closed form equal to gamma(r) * sum_{k=0}^n X_{rk} Y_{r(n-k)}
/// for any two Horadam sequences. Valid for every integer r (negative r uses
/// negative-index sequence values); evaluating at gamma(r) = 0 is legal, the
/// equality is simply 0 = RHS there only when RHS vanishes too.
inline Rational horadam_conv_rhs(const RationalSeqFn& x, const RationalSeqFn& v_x,
                                 const Rational& q_x, const RationalSeqFn& y,
                                 const RationalSeqFn& v_y, const Rational& q_y, long long r,
                                 long long n) {
  if (n < 0) throw std::invalid_argument("horadam_conv_rhs: n must be >= 0");
  const Rational qxr = q_x.pow(r);
  const Rational qyr = q_y.pow(r);
  const Rational vxr = v_x(r);
  const Rational vyr = v_y(r);
  const Rational cx = qxr - vxr * vyr + v_y(2 * r);
  const Rational cy = qyr - vyr * vxr + v_x(2 * r);
  const long long rn = r * n;
  const long long rn1 = r * (n + 1);
  Rational total = qxr * x(rn) * (cx * y(0) + vxr * y(r) - y(2 * r));
  total -= x(rn1) * (cx * y(r) + vxr * y(2 * r) - y(3 * r));
  total += qyr * y(rn) * (cy * x(0) + vyr * x(r) - x(2 * r));
  total -= y(rn1) * (cy * x(r) + vyr * x(2 * r) - x(3 * r));
  return total;
}

inline Rational horadam_conv_rhs(const HoradamWithV& x, const HoradamWithV& y, long long r,
                                 long long n) {
  return horadam_conv_rhs(rational_seq_fn(x.seq), rational_seq_fn(x.v), x.q,
                          rational_seq_fn(y.seq), rational_seq_fn(y.v), y.q, r, n);
}

enum class CarlitzVariant { lucas, chebyshev };

/// Right-hand side of the symmetric-weight convolution theorem:
/// U_{rn} * sum T(n,k) for the Lucas variant, (u_{rn-1}/2) * sum T(n,k) for
/// the Chebyshev variant. The row sum uses the family's closed form when it
/// is defined at this context and falls back to direct summation otherwise.
inline ExactScalar carlitz_rhs(const WeightFamily& w, const WeightContext& ctx, long long r,
                               long long n, CarlitzVariant variant) {
  if (!w.domain(n)) throw std::domain_error("carlitz_rhs: n outside weight family domain");
  std::optional<ExactScalar> row;
  if (w.closed_sum) {
    require_context(w, ctx);
    row = w.closed_sum(ctx, n);
  }
  const ExactScalar row_sum = row ? *row : weight_row_sum_brute(w, ctx, n);
  if (variant == CarlitzVariant::lucas) {
    if (!ctx.lucas_u) throw std::invalid_argument("carlitz_rhs: context is missing the Lucas pair");
    return ExactScalar(ctx.lucas_u->at(r * n)) * row_sum;
  }
  const Rational half(BigInt(1), BigInt(2));
  return ExactScalar(cheb_poly(ChebKind::second, r * n - 1) * half) * row_sum;
}

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

enum class Provenance { theorem_derived, as_printed_example };

inline const char* to_string(Provenance p) {
  return p == Provenance::theorem_derived ? "theorem-derived" : "as-printed-example";
}

enum class ScalarDomain { rational, polynomial };

inline const char* to_string(ScalarDomain d) {
  return d == ScalarDomain::rational ? "rational" : "polynomial";
}

/// Outcome of checking one identity at one (r, n) cell. pass/fail carry both
/// exact values; skipped carries the reason instead.
struct CheckResult {
  std::string identity;
  long long r = 0;
  long long n = 0;
  CheckStatus status = CheckStatus::skipped;
  std::optional<ExactScalar> lhs;
  std::optional<ExactScalar> rhs;
  std::string reason;
};

/// One catalogued convolution identity. The lhs closure must compute a
/// brute-force sum (times any normalizer the identity itself states, e.g.
/// gamma(r)); the rhs closure is the closed form under test. The domain
/// predicate returns a skip reason for out-of-domain cells, nullopt when the
/// cell should be evaluated.
struct IdentityEntry {
  std::string id;
  std::string anchor;
  ScalarDomain scalar_domain = ScalarDomain::rational;
  Provenance provenance = Provenance::theorem_derived;
  std::vector<std::string> tags;
  std::function<std::optional<std::string>(long long r, long long n)> domain;
  std::function<ExactScalar(long long r, long long n)> lhs;
  std::function<ExactScalar(long long r, long long n)> rhs;

  bool has_tag(std::string_view t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
  }
};

inline CheckResult check_identity(const IdentityEntry& entry, long long r, long long n) {
  CheckResult res;
  res.identity = entry.id;
  res.r = r;
  res.n = n;
  if (auto reason = entry.domain(r, n)) {
    res.status = CheckStatus::skipped;
    res.reason = *reason;
    return res;
  }
  ExactScalar lhs = entry.lhs(r, n);
  ExactScalar rhs = entry.rhs(r, n);
  const ScalarKind want =
      entry.scalar_domain == ScalarDomain::rational ? ScalarKind::rational : ScalarKind::polynomial;
  if (lhs.kind() != want || rhs.kind() != want)
    throw std::logic_error("identity '" + entry.id + "': value escaped its declared scalar domain");
  res.status = (lhs == rhs) ? CheckStatus::pass : CheckStatus::fail;
  res.lhs = std::move(lhs);
  res.rhs = std::move(rhs);
  return res;
}

/// Positions a failing cell in the minimal-counterexample order:
/// smallest n first, then smallest |r|, ties broken toward positive r.
inline bool counterexample_less(const CheckResult& a, const CheckResult& b) {
  if (a.n != b.n) return a.n < b.n;
  const long long aa = std::abs(a.r), ab = std::abs(b.r);
  if (aa != ab) return aa < ab;
  return a.r > b.r;
}

struct EntryTally {
  std::string id;
  long long pass = 0;
  long long fail = 0;
  long long skipped = 0;
  /// Minimal-n counterexample per r value.
  std::map<long long, CheckResult> min_fail_by_r;
  /// Overall minimal counterexample for the entry.
  std::optional<CheckResult> min_counterexample;
};

struct SweepReport {
  /// Every checked cell in canonical order: catalog order, then r ascending,
  /// then n ascending. Truncated just past the first failure under fail-fast.
  std::vector<CheckResult> cells;
  std::vector<EntryTally> tallies;
  long long total_pass = 0;
  long long total_fail = 0;
  long long total_skipped = 0;
  bool any_fail() const { return total_fail > 0; }
};

struct Range {
  long long lo = 0;
  long long hi = 0;
};

struct SweepOptions {
  int workers = 1;
  bool fail_fast = false;
};

/// Evaluates every (entry, r, n) cell over the given ranges. Cells are
/// independent; with workers > 1 they are evaluated by a small thread pool
/// and reassembled in canonical order, so the report is byte-identical to a
/// sequential run.
inline SweepReport sweep(const std::vector<IdentityEntry>& entries, Range r_range, Range n_range,
                         SweepOptions opts = {}) {
  if (r_range.lo > r_range.hi || n_range.lo > n_range.hi)
    throw std::invalid_argument("sweep: empty range");
  struct Cell {
    std::size_t entry;
    long long r;
    long long n;
  };
  std::vector<Cell> cells;
  cells.reserve(entries.size() * static_cast<std::size_t>(r_range.hi - r_range.lo + 1) *
                static_cast<std::size_t>(n_range.hi - n_range.lo + 1));
  for (std::size_t e = 0; e < entries.size(); ++e)
    for (long long r = r_range.lo; r <= r_range.hi; ++r)
      for (long long n = n_range.lo; n <= n_range.hi; ++n) cells.push_back(Cell{e, r, n});

  std::vector<CheckResult> results(cells.size());
  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      results[i] = check_identity(entries[cells[i].entry], cells[i].r, cells[i].n);
      if (opts.fail_fast && results[i].status == CheckStatus::fail) {
        results.resize(i + 1);
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto work = [&] {
      while (!stop.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) break;
        results[i] = check_identity(entries[cells[i].entry], cells[i].r, cells[i].n);
        if (opts.fail_fast && results[i].status == CheckStatus::fail) stop.store(true);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (opts.fail_fast) {
      // Cut at the first failure in canonical order; later slots computed by
      // other workers are discarded so the output matches a sequential run.
      std::size_t cut = results.size();
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].identity.empty()) {
          // Unevaluated slot before any failure: evaluate it now.
          results[i] = check_identity(entries[cells[i].entry], cells[i].r, cells[i].n);
        }
        if (results[i].status == CheckStatus::fail) {
          cut = i + 1;
          break;
        }
      }
      results.resize(cut);
    }
  }

  SweepReport report;
  report.tallies.reserve(entries.size());
  for (const auto& e : entries) {
    EntryTally t;
    t.id = e.id;
    report.tallies.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CheckResult& res = results[i];
    EntryTally& tally = report.tallies[cells[i].entry];
    switch (res.status) {
      case CheckStatus::pass:
        ++tally.pass;
        ++report.total_pass;
        break;
      case CheckStatus::skipped:
        ++tally.skipped;
        ++report.total_skipped;
        break;
      case CheckStatus::fail: {
        ++tally.fail;
        ++report.total_fail;
        auto [it, inserted] = tally.min_fail_by_r.try_emplace(res.r, res);
        if (!inserted && res.n < it->second.n) it->second = res;
        if (!tally.min_counterexample || counterexample_less(res, *tally.min_counterexample))
          tally.min_counterexample = res;
        break;
      }
    }
  }
  report.cells = std::move(results);
  return report;
}

/// Verifies the four-term geometric-sum identity at one parameter set:
/// sum_{k=0}^n (A1 x^k + B1 y^k)(A2 z^{n-k} + B2 w^{n-k}) against the four
/// ratio terms, each evaluated through geom_ratio_sum so coincident bases
/// take the limit branch. All eight scalars must be nonzero.
inline CheckResult theorem1_check(const ExactScalar& a1, const ExactScalar& a2,
                                  const ExactScalar& b1, const ExactScalar& b2,
                                  const ExactScalar& x, const ExactScalar& y, const ExactScalar& z,
                                  const ExactScalar& w, long long n) {
  for (const ExactScalar* s : {&a1, &a2, &b1, &b2, &x, &y, &z, &w})
    if (s->is_zero())
      throw std::invalid_argument("theorem1_check: all eight scalars must be nonzero");
  if (n < 0) throw std::invalid_argument("theorem1_check: n must be >= 0");
  ExactScalar lhs;
  for (long long k = 0; k <= n; ++k)
    lhs += (a1 * x.pow(k) + b1 * y.pow(k)) * (a2 * z.pow(n - k) + b2 * w.pow(n - k));
  const ExactScalar rhs = a1 * a2 * geom_ratio_sum(x, z, n) + a1 * b2 * geom_ratio_sum(x, w, n) +
                          a2 * b1 * geom_ratio_sum(y, z, n) + b1 * b2 * geom_ratio_sum(y, w, n);
  CheckResult res;
  res.identity = "four_term_geom_sum";
  res.r = 0;
  res.n = n;
  res.status = (lhs == rhs) ? CheckStatus::pass : CheckStatus::fail;
  res.lhs = lhs;
  res.rhs = rhs;
  return res;
}

}  // namespace seqconv
