#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

#include "seqconv/identities.hpp"

namespace seqconv {

enum class OutputFormat { table, json, csv };

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

using OrderedJson = nlohmann::ordered_json;

/// Exact values serialize as "p" / "p/q" strings; polynomial values as
/// coefficient lists of such strings, lowest degree first.
inline OrderedJson scalar_to_json(const ExactScalar& v) {
  if (v.kind() == ScalarKind::polynomial) {
    OrderedJson arr = OrderedJson::array();
    const Polynomial& p = v.as_polynomial();
    if (p.is_zero()) {
      arr.push_back("0");
    } else {
      for (const auto& c : p.coeffs()) arr.push_back(c.str());
    }
    return arr;
  }
  return v.str();
}

inline OrderedJson result_to_json(const CheckResult& res) {
  OrderedJson j;
  j["identity"] = res.identity;
  j["r"] = res.r;
  j["n"] = res.n;
  j["status"] = to_string(res.status);
  j["lhs"] = res.lhs ? scalar_to_json(*res.lhs) : OrderedJson(nullptr);
  j["rhs"] = res.rhs ? scalar_to_json(*res.rhs) : OrderedJson(nullptr);
  j["reason"] = res.reason;
  return j;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline void write_result_line(std::ostream& os, const CheckResult& res, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json:
      os << result_to_json(res).dump() << '\n';
      return;
    case OutputFormat::csv:
      os << csv_quote(res.identity) << ',' << res.r << ',' << res.n << ','
         << to_string(res.status) << ',' << csv_quote(res.lhs ? res.lhs->str() : "") << ','
         << csv_quote(res.rhs ? res.rhs->str() : "") << ',' << csv_quote(res.reason) << '\n';
      return;
    case OutputFormat::table: {
      os << res.identity << "  r=" << res.r << " n=" << res.n << "  " << to_string(res.status);
      if (res.status == CheckStatus::skipped) {
        os << "  reason: " << res.reason;
      } else {
        os << "  lhs=" << (res.lhs ? res.lhs->str() : "") << "  rhs="
           << (res.rhs ? res.rhs->str() : "");
      }
      os << '\n';
      return;
    }
  }
}

inline void write_csv_header(std::ostream& os) {
  os << "identity,r,n,status,lhs,rhs,reason\n";
}

/// Per-entry tallies and minimal counterexamples, appended after the cell
/// records (table and json formats; csv stays pure cell records).
inline void write_summary(std::ostream& os, const SweepReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::csv) return;
  if (fmt == OutputFormat::table) {
    os << "#\n";
    for (const auto& t : report.tallies) {
      os << "# " << t.id << ": pass=" << t.pass << " fail=" << t.fail
         << " skipped=" << t.skipped;
      if (t.min_counterexample)
        os << "  minimal_counterexample=(r=" << t.min_counterexample->r
           << ", n=" << t.min_counterexample->n << ")";
      os << '\n';
    }
    os << "# total: pass=" << report.total_pass << " fail=" << report.total_fail
       << " skipped=" << report.total_skipped << '\n';
    return;
  }
  for (const auto& t : report.tallies) {
    OrderedJson j;
    j["summary"] = "entry";
    j["identity"] = t.id;
    j["pass"] = t.pass;
    j["fail"] = t.fail;
    j["skipped"] = t.skipped;
    j["min_counterexample"] =
        t.min_counterexample ? result_to_json(*t.min_counterexample) : OrderedJson(nullptr);
    os << j.dump() << '\n';
  }
  OrderedJson j;
  j["summary"] = "total";
  j["pass"] = report.total_pass;
  j["fail"] = report.total_fail;
  j["skipped"] = report.total_skipped;
  os << j.dump() << '\n';
}

inline void write_report(std::ostream& os, const SweepReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::csv) write_csv_header(os);
  for (const auto& res : report.cells) write_result_line(os, res, fmt);
  write_summary(os, report, fmt);
}

inline void write_entry_line(std::ostream& os, const IdentityEntry& e, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    OrderedJson j;
    j["id"] = e.id;
    j["provenance"] = to_string(e.provenance);
    j["scalar_domain"] = to_string(e.scalar_domain);
    j["tags"] = e.tags;
    j["anchor"] = e.anchor;
    os << j.dump() << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    std::string tags;
    for (std::size_t i = 0; i < e.tags.size(); ++i) {
      if (i) tags += ';';
      tags += e.tags[i];
    }
    os << csv_quote(e.id) << ',' << to_string(e.provenance) << ',' << to_string(e.scalar_domain)
       << ',' << csv_quote(tags) << ',' << csv_quote(e.anchor) << '\n';
    return;
  }
  os << e.id << " | " << to_string(e.provenance) << " | " << to_string(e.scalar_domain) << " | ";
  for (std::size_t i = 0; i < e.tags.size(); ++i) {
    if (i) os << ',';
    os << e.tags[i];
  }
  os << " | " << e.anchor << '\n';
}

}  // namespace seqconv
