#pragma once

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seqconv/catalog.hpp"
#include "seqconv/report.hpp"

namespace seqconv::cli {

enum class Command { list, verify, eval, conv, cheb };

struct CliConfig {
  Command command = Command::verify;

  // verify / list selection
  std::vector<std::string> ids;   // empty = all
  std::vector<std::string> tags;  // empty = all; else entries carrying any listed tag
  Range r_range{1, 4};
  Range n_range{0, 20};
  OutputFormat format = OutputFormat::table;
  bool fail_fast = false;
  int workers = 0;  // 0 = take SEQCONV_WORKERS, else 1
  bool no_header = false;

  // eval
  std::string sequence;
  std::string params;  // "a,b,p,q" overrides sequence
  long long index = 0;

  // conv
  std::string f_name;
  std::string g_name;
  long long conv_r = 1;
  long long conv_n = 0;

  // cheb
  std::string cheb_kind = "t";
  long long cheb_degree = 0;
};

/// Inclusive "a..b" range with negative bounds allowed.
inline std::optional<Range> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string lo_s = text.substr(0, pos), hi_s = text.substr(pos + 2);
    const long long lo = std::stoll(lo_s, &used);
    if (used != lo_s.size()) return std::nullopt;
    const long long hi = std::stoll(hi_s, &used);
    if (used != hi_s.size()) return std::nullopt;
    if (lo > hi) return std::nullopt;
    return Range{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// "p" or "p/q" with arbitrary-precision parts.
inline std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::optional<OutputFormat> parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  return std::nullopt;
}

inline int resolve_workers(const CliConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("SEQCONV_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 1;
}

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace detail {

inline std::optional<std::vector<const IdentityEntry*>> select_entries(
    const CliConfig& cfg, const std::vector<IdentityEntry>& catalog, std::ostream& err) {
  std::vector<const IdentityEntry*> selected;
  if (!cfg.ids.empty()) {
    for (const auto& id : cfg.ids) {
      const IdentityEntry* e = find_entry(catalog, id);
      if (!e) {
        err << "error: unknown identity id '" << id << "'\n";
        return std::nullopt;
      }
      selected.push_back(e);
    }
  } else {
    for (const auto& e : catalog) selected.push_back(&e);
  }
  if (!cfg.tags.empty()) {
    std::vector<const IdentityEntry*> filtered;
    for (const auto* e : selected)
      for (const auto& t : cfg.tags)
        if (e->has_tag(t)) {
          filtered.push_back(e);
          break;
        }
    selected = std::move(filtered);
  }
  return selected;
}

inline int run_verify(const CliConfig& cfg, const std::vector<IdentityEntry>& catalog,
                      std::ostream& out, std::ostream& err) {
  auto selected = select_entries(cfg, catalog, err);
  if (!selected) return 2;
  std::vector<IdentityEntry> entries;
  entries.reserve(selected->size());
  for (const auto* e : *selected) entries.push_back(*e);

  if (!cfg.no_header) {
    if (cfg.format == OutputFormat::json) {
      OrderedJson j;
      j["generated"] = utc_timestamp();
      out << j.dump() << '\n';
    } else {
      out << "# seqconv verify  generated=" << utc_timestamp() << '\n';
    }
  }

  SweepOptions opts;
  opts.workers = resolve_workers(cfg);
  opts.fail_fast = cfg.fail_fast;
  const SweepReport report = sweep(entries, cfg.r_range, cfg.n_range, opts);
  write_report(out, report, cfg.format);
  return report.any_fail() ? 1 : 0;
}

inline int run_list(const CliConfig& cfg, const std::vector<IdentityEntry>& catalog,
                    std::ostream& out, std::ostream& err) {
  auto selected = select_entries(cfg, catalog, err);
  if (!selected) return 2;
  if (cfg.format == OutputFormat::csv) out << "id,provenance,scalar_domain,tags,anchor\n";
  for (const auto* e : *selected) write_entry_line(out, *e, cfg.format);
  return 0;
}

inline int run_eval(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.params.empty()) {
      std::vector<Rational> vals;
      std::string cur;
      for (char c : cfg.params + ",") {
        if (c == ',') {
          auto r = parse_rational(cur);
          if (!r) {
            err << "error: bad rational '" << cur << "' in --params\n";
            return 2;
          }
          vals.push_back(*r);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (vals.size() != 4) {
        err << "error: --params expects a,b,p,q\n";
        return 2;
      }
      HoradamSeq seq(HoradamParams(vals[0], vals[1], vals[2], vals[3]));
      out << seq.at(cfg.index).str() << '\n';
      return 0;
    }
    const auto seq = make_named(cfg.sequence);
    out << seq->at(cfg.index).str() << '\n';
    return 0;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

inline int run_conv(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.conv_n < 0) {
    err << "error: n must be >= 0\n";
    return 2;
  }
  try {
    const auto f = make_named(cfg.f_name);
    const auto g = make_named(cfg.g_name);
    const ExactScalar v = convolve(seq_fn(f), seq_fn(g), cfg.conv_r, cfg.conv_n);
    out << v.str() << '\n';
    return 0;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

inline int run_cheb(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ChebKind kind;
  if (cfg.cheb_kind == "t" || cfg.cheb_kind == "first") {
    kind = ChebKind::first;
  } else if (cfg.cheb_kind == "u" || cfg.cheb_kind == "second") {
    kind = ChebKind::second;
  } else {
    err << "error: --kind must be t or u\n";
    return 2;
  }
  out << cheb_poly(kind, cfg.cheb_degree).str() << '\n';
  return 0;
}

}  // namespace detail

/// Executes one fully-parsed command. Exit codes: 0 = every checked cell
/// passed (skips allowed), 1 = at least one failing cell, 2 = usage or
/// configuration error. A non-null catalog substitutes for the built-in one
/// (used when embedding the engine with extra entries).
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err,
               const std::vector<IdentityEntry>* catalog = nullptr) {
  const std::vector<IdentityEntry>& cat = catalog ? *catalog : builtin_catalog();
  switch (cfg.command) {
    case Command::verify: return detail::run_verify(cfg, cat, out, err);
    case Command::list: return detail::run_list(cfg, cat, out, err);
    case Command::eval: return detail::run_eval(cfg, out, err);
    case Command::conv: return detail::run_conv(cfg, out, err);
    case Command::cheb: return detail::run_cheb(cfg, out, err);
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace seqconv::cli
