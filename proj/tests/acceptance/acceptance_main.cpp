// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Everything is exact equality; there are no tolerances
// anywhere, only ranges and wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqconv/catalog.hpp"
#include "seqconv/cli.hpp"
#include "seqconv/report.hpp"

using namespace seqconv;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      notes_.push_back(what);
    }
  }

  void note(const std::string& what) { notes_.push_back(what); }

  void finish(double seconds) {
    std::printf("[%s] %s (%.2fs)\n", ok_ ? "PASS" : "FAIL", label_.c_str(), seconds);
    for (const auto& n : notes_) std::printf("       - %s\n", n.c_str());
    if (!ok_) ++g_failures;
  }

 private:
  std::string label_;
  bool ok_ = true;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<IdentityEntry> pick(const std::vector<std::string>& ids) {
  std::vector<IdentityEntry> out;
  for (const auto& id : ids) {
    const IdentityEntry* e = find_entry(builtin_catalog(), id);
    if (!e) throw std::logic_error("acceptance: missing catalog id " + id);
    out.push_back(*e);
  }
  return out;
}

std::string cell_str(const CheckResult& c) {
  std::ostringstream os;
  os << c.identity << " at (r=" << c.r << ", n=" << c.n << "): lhs=" << (c.lhs ? c.lhs->str() : "")
     << " rhs=" << (c.rhs ? c.rhs->str() : "");
  return os.str();
}

void require_clean(Criterion& c, const SweepReport& rep, const std::string& what) {
  c.require(rep.total_fail == 0, what + ": " + std::to_string(rep.total_fail) + " failing cells");
  c.require(rep.total_pass > 0, what + ": no cells were actually checked");
  if (rep.total_fail > 0)
    for (const auto& t : rep.tallies)
      if (t.min_counterexample) c.note("counterexample: " + cell_str(*t.min_counterexample));
}

// ---------------------------------------------------------------------------

void criterion1() {
  Criterion c("criterion 1: classical convolutions exact for 0 <= n <= 60 in < 1 s");
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = pick({"eq1_fib_fib", "eq2_lucas_lucas", "eq3_lucas_fib",
                             "eq4_jacobsthal_fib", "eq5_pell_fib", "eq6_lucas_jacobsthal",
                             "eq7_fib_balancing"});
  const SweepReport rep = sweep(entries, Range{1, 2}, Range{0, 60});
  require_clean(c, rep, "classical sweep");
  // each identity is checked at its own stride for all 61 indices
  for (const auto& t : rep.tallies)
    c.require(t.pass == 61, t.id + ": expected 61 passing cells, got " + std::to_string(t.pass));
  const double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + std::to_string(dt) + "s exceeds 1s");
  c.finish(dt);
}

void criterion2() {
  Criterion c("criterion 2: stride-r pair/self/squared-index convolutions, r in [1,6], n in [0,40]");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<IdentityEntry> entries;
  for (const auto& e : builtin_catalog())
    if (e.has_tag("uv") || e.has_tag("selfconv") || e.has_tag("sqidx"))
      if (e.scalar_domain == ScalarDomain::rational) entries.push_back(e);
  c.require(entries.size() == 20, "expected 20 sequence entries, got " +
                                      std::to_string(entries.size()));
  const SweepReport rep = sweep(entries, Range{1, 6}, Range{0, 40}, SweepOptions{2, false});
  require_clean(c, rep, "sequence sweep");
  c.finish(seconds_since(t0));
}

void criterion3() {
  Criterion c("criterion 3: general Horadam convolution over 200 random pairs, r in [1,3], n in [0,25]");
  const auto t0 = std::chrono::steady_clock::now();
  // Deterministic raw-modulo draws so the parameter set is stable across
  // standard libraries.
  std::mt19937_64 eng(757575202508ULL);
  auto draw = [&eng](long long lo, long long hi) {
    return lo + static_cast<long long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  auto draw_params = [&]() {
    while (true) {
      const long long a = draw(-5, 5), b = draw(-5, 5);
      const long long p = draw(-5, 5), q = draw(-5, 5);
      if (p == 0 || q == 0) continue;
      if (p * p - 4 * q == 0) continue;
      return HoradamParams(Rational(a), Rational(b), Rational(p), Rational(q));
    }
  };
  long long checked = 0, skipped = 0, wrong = 0;
  for (int i = 0; i < 200; ++i) {
    const auto x = with_associated_v(std::make_shared<HoradamSeq>(draw_params()));
    const auto y = with_associated_v(std::make_shared<HoradamSeq>(draw_params()));
    for (long long r = 1; r <= 3; ++r) {
      const Rational gamma = gamma_general(x, y, r);
      if (gamma.is_zero()) {
        skipped += 26;
        continue;
      }
      for (long long n = 0; n <= 25; ++n) {
        const ExactScalar lhs =
            ExactScalar(gamma) * convolve(seq_fn(x.seq), seq_fn(y.seq), r, n);
        if (lhs == ExactScalar(horadam_conv_rhs(x, y, r, n))) {
          ++checked;
        } else {
          ++wrong;
        }
      }
    }
  }
  c.note("checked " + std::to_string(checked) + " cells, skipped " + std::to_string(skipped) +
         " cells with gamma(r) = 0");
  c.require(wrong == 0, std::to_string(wrong) + " cells disagree");
  c.require(checked > 0, "no cells checked");
  c.finish(seconds_since(t0));
}

void criterion4() {
  Criterion c("criterion 4: Lucas-Jacobsthal convolution for r in [-4,6] (gamma-guarded), n in [0,30]");
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = pick({"thm4_lucas_jacobsthal_general", "thm4_lucas_jacobsthal_printed",
                             "thm4_example_r1", "thm4_example_r2", "thm4_example_r3"});
  const SweepReport rep = sweep(entries, Range{-4, 6}, Range{0, 30}, SweepOptions{2, false});
  require_clean(c, rep, "Lucas-Jacobsthal sweep");
  for (const auto& t : rep.tallies) {
    if (t.id.rfind("thm4_example", 0) == 0)
      c.require(t.pass == 31, t.id + ": expected 31 passing cells (fixed stride), got " +
                                  std::to_string(t.pass));
  }
  // the r = 3 example exercises the rational coefficients 11/62, 104/62,
  // 21/124, 9/124; make sure it was really evaluated
  const IdentityEntry* r3 = find_entry(builtin_catalog(), "thm4_example_r3");
  const CheckResult probe = check_identity(*r3, 3, 4);
  c.require(probe.status == CheckStatus::pass, "thm4_example_r3 spot check at (3,4)");
  c.finish(seconds_since(t0));
}

void criterion5() {
  Criterion c("criterion 5: first/second-kind pair convolutions, r in [1,4], n in [0,30]");
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = pick({"firstkind_pell_jacobsthal_general", "secondkind_lucas_jlucas_general",
                             "lucasjlucas_example_r1"});
  const SweepReport rep = sweep(entries, Range{1, 4}, Range{0, 30}, SweepOptions{2, false});
  require_clean(c, rep, "first/second-kind sweep");
  c.finish(seconds_since(t0));
}

void criterion6() {
  Criterion c("criterion 6: Chebyshev identities coefficient-exact for r in [1,4], n in [0,15] in < 10 s");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<IdentityEntry> entries =
      pick({"cheb_tu_conv", "cheb_tt_conv", "cheb_uu_conv", "sqidx_cheb_tu", "sqidx_cheb_tt"});
  for (const auto& e : builtin_catalog())
    if (e.id.rfind("carlitz_cheb_", 0) == 0) entries.push_back(e);
  const SweepReport rep = sweep(entries, Range{1, 4}, Range{0, 15}, SweepOptions{2, false});
  require_clean(c, rep, "Chebyshev sweep");
  const double dt = seconds_since(t0);
  c.require(dt < 10.0, "runtime " + std::to_string(dt) + "s exceeds 10s");
  c.finish(dt);
}

void criterion7() {
  Criterion c("criterion 7: symmetric-weight theorem for all twelve families, r in [1,4], n in [0,20]");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<IdentityEntry> entries;
  for (const auto& e : builtin_catalog())
    if (e.has_tag("carlitz")) entries.push_back(e);
  c.require(entries.size() == 24, "expected 24 weighted entries, got " +
                                      std::to_string(entries.size()));
  const SweepReport rep = sweep(entries, Range{1, 4}, Range{0, 20}, SweepOptions{2, false});
  require_clean(c, rep, "weighted sweep");
  for (const auto& t : rep.tallies)
    if (t.id.find("binom_2n_2k") != std::string::npos)
      c.require(t.skipped >= 4, t.id + ": n = 0 cells must be skipped");

  // closed row sums against brute force on the same range
  long long mismatches = 0;
  for (long long r = 1; r <= 4; ++r) {
    const WeightContext ctx = weight_context_for_pair(r, Rational(1), Rational(-1));
    for (const auto& fam : weight_registry())
      for (long long n = 0; n <= 20; ++n) {
        if (!fam.domain(n)) continue;
        if (weight_sum_closed(fam, ctx, n) != weight_row_sum_brute(fam, ctx, n)) ++mismatches;
      }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " closed-vs-brute row sum mismatches");

  // Bernoulli convolution identity as exact polynomial equality
  for (long long n = 1; n <= 12; ++n) {
    Polynomial brute;
    for (long long k = 0; k <= n; ++k)
      brute += Rational(binomial(n, k)) * bernoulli_poly(k) * bernoulli_poly(n - k);
    const Polynomial closed =
        Polynomial(std::vector<Rational>{Rational(-1), Rational(2)}) *
            bernoulli_poly(n - 1).scale_arg(Rational(2)) * Rational(n) -
        bernoulli_poly(n).scale_arg(Rational(2)) * Rational(n - 1);
    if (brute != closed) {
      c.require(false, "Bernoulli identity fails at n = " + std::to_string(n));
      break;
    }
  }
  c.finish(seconds_since(t0));
}

void criterion8() {
  Criterion c("criterion 8: errata adjudication with minimal counterexamples and fail-path check");
  const auto t0 = std::chrono::steady_clock::now();
  const SweepReport rep = sweep(builtin_catalog(), Range{1, 4}, Range{0, 20}, SweepOptions{2, false});

  // every as-printed entry gets a definitive status on this sweep
  std::map<std::string, const EntryTally*> tally_by_id;
  for (const auto& t : rep.tallies) tally_by_id[t.id] = &t;
  for (const auto& e : builtin_catalog()) {
    if (e.provenance != Provenance::as_printed_example) continue;
    const EntryTally* t = tally_by_id[e.id];
    c.require(t && t->pass + t->fail > 0, e.id + ": no adjudicated cells");
    if (t && t->fail > 0) {
      c.require(t->min_counterexample.has_value(), e.id + ": failing but no counterexample");
      if (t->min_counterexample) c.note(e.id + " FAILS, " + cell_str(*t->min_counterexample));
    } else if (t) {
      c.note(e.id + " holds on the swept domain");
    }
  }

  // frozen minimal counterexamples for the known misprints
  const std::map<std::string, std::pair<long long, long long>> expected_min = {
      {"cheb_tu_conv_printed", {1, 0}},   {"sqidx_cheb_tu_printed", {1, 1}},
      {"thm5_fibonacci_pell_printed", {1, 2}}, {"firstkind_pell_jacobsthal_printed", {2, 0}},
      {"secondkind_lucas_jlucas_printed", {1, 0}}, {"fibpell_example_r2", {2, 2}},
      {"fibpell_example_r3", {3, 2}},     {"pelljac_example_r1", {1, 0}},
      {"pelljac_example_r2", {2, 0}},     {"pelljac_example_r3", {3, 0}},
      {"lucasjlucas_example_r3", {3, 0}}, {"seiffert_fib_pell", {1, 0}},
  };
  for (const auto& [id, rn] : expected_min) {
    const EntryTally* t = tally_by_id[id];
    if (!t || !t->min_counterexample) {
      c.require(false, id + ": expected a minimal counterexample");
      continue;
    }
    c.require(t->min_counterexample->r == rn.first && t->min_counterexample->n == rn.second,
              id + ": minimal counterexample moved to (r=" +
                  std::to_string(t->min_counterexample->r) +
                  ", n=" + std::to_string(t->min_counterexample->n) + ")");
  }
  // and the printed transcriptions that really do hold
  for (const char* id : {"eq1_fib_fib", "eq6_lucas_jacobsthal", "thm4_lucas_jacobsthal_printed",
                         "thm4_example_r1", "thm4_example_r2", "thm4_example_r3",
                         "lucasjlucas_example_r1", "lucasjlucas_example_r2"}) {
    const EntryTally* t = tally_by_id[id];
    c.require(t && t->fail == 0, std::string(id) + ": expected to hold");
  }

  // injected perturbed entry must drive the cli exit code to 1
  std::vector<IdentityEntry> injected = {*find_entry(builtin_catalog(), "eq3_lucas_fib")};
  IdentityEntry bad = injected[0];
  bad.id = "eq3_lucas_fib_perturbed";
  bad.rhs = [inner = injected[0].rhs](long long r, long long n) {
    return inner(r, n) + ExactScalar(1);
  };
  injected.push_back(bad);
  cli::CliConfig cfg;
  cfg.command = cli::Command::verify;
  cfg.r_range = {1, 1};
  cfg.n_range = {0, 5};
  cfg.no_header = true;
  cfg.format = OutputFormat::json;
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err, &injected);
  c.require(code == 1, "injected failure: expected exit code 1, got " + std::to_string(code));
  c.require(out.str().find("eq3_lucas_fib_perturbed") != std::string::npos,
            "injected failure: record missing from the report");
  c.finish(seconds_since(t0));
}

void criterion9() {
  Criterion c("criterion 9: full default sweep in < 60 s, byte-identical sequential vs concurrent");
  const auto t0 = std::chrono::steady_clock::now();
  cli::CliConfig cfg;
  cfg.command = cli::Command::verify;
  cfg.r_range = {1, 4};
  cfg.n_range = {0, 20};
  cfg.format = OutputFormat::json;
  cfg.no_header = true;
  cfg.workers = 1;
  std::ostringstream seq_out, seq_err;
  const auto seq_t0 = std::chrono::steady_clock::now();
  const int seq_code = cli::run(cfg, seq_out, seq_err);
  const double seq_dt = seconds_since(seq_t0);
  c.note("sequential sweep: " + std::to_string(seq_dt) + "s");
  c.require(seq_dt < 60.0, "sequential sweep exceeds 60s");
  // known misprints fail, so the full catalog exits 1 (never 2)
  c.require(seq_code == 1, "full sweep exit code: expected 1, got " + std::to_string(seq_code));

  cfg.workers = 4;
  std::ostringstream par_out, par_err;
  const int par_code = cli::run(cfg, par_out, par_err);
  c.require(par_code == seq_code, "exit codes differ between worker counts");
  c.require(seq_out.str() == par_out.str(), "reports differ between sequential and concurrent runs");

  // determinism across repeated identical runs
  std::ostringstream again;
  cli::run(cfg, again, par_err);
  c.require(par_out.str() == again.str(), "repeated run produced different bytes");
  c.finish(seconds_since(t0));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0) {
    std::printf("ALL CRITERIA PASS\n");
  } else {
    std::printf("%d CRITERIA FAILED\n", g_failures);
  }
  return g_failures;
}
