#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "seqconv/cli.hpp"

using namespace seqconv;
using seqconv::cli::CliConfig;
using seqconv::cli::Command;

namespace {

struct RunOutput {
  int code;
  std::string out;
  std::string err;
};

RunOutput run_cfg(const CliConfig& cfg, const std::vector<IdentityEntry>* catalog = nullptr) {
  std::ostringstream out, err;
  const int code = seqconv::cli::run(cfg, out, err, catalog);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("range parsing") {
  auto r = seqconv::cli::parse_range("1..4");
  REQUIRE(r);
  REQUIRE(r->lo == 1);
  REQUIRE(r->hi == 4);
  r = seqconv::cli::parse_range("-4..6");
  REQUIRE(r);
  REQUIRE(r->lo == -4);
  REQUIRE(r->hi == 6);
  REQUIRE(!seqconv::cli::parse_range("4..1"));
  REQUIRE(!seqconv::cli::parse_range("4"));
  REQUIRE(!seqconv::cli::parse_range("a..b"));
  REQUIRE(!seqconv::cli::parse_range("1..2x"));
}

TEST_CASE("rational parsing") {
  auto v = seqconv::cli::parse_rational("-3/6");
  REQUIRE(v);
  REQUIRE(*v == Rational(BigInt(-1), BigInt(2)));
  REQUIRE(*seqconv::cli::parse_rational("7") == Rational(7));
  REQUIRE(!seqconv::cli::parse_rational("x"));
}

TEST_CASE("eval command") {
  CliConfig cfg;
  cfg.command = Command::eval;
  cfg.sequence = "jacobsthal";
  cfg.index = -1;
  auto res = run_cfg(cfg);
  REQUIRE(res.code == 0);
  REQUIRE(res.out == "1/2\n");

  cfg.sequence = "fibonacci";
  cfg.index = 10;
  REQUIRE(run_cfg(cfg).out == "55\n");

  cfg.sequence.clear();
  cfg.params = "2,1,1,-1";  // lucas
  REQUIRE(run_cfg(cfg).out == "123\n");

  cfg.params = "1,2,3";  // wrong arity
  REQUIRE(run_cfg(cfg).code == 2);

  cfg.params.clear();
  cfg.sequence = "nope";
  res = run_cfg(cfg);
  REQUIRE(res.code == 2);
  REQUIRE(res.err.find("unknown sequence") != std::string::npos);
}

TEST_CASE("cheb command") {
  CliConfig cfg;
  cfg.command = Command::cheb;
  cfg.cheb_kind = "t";
  cfg.cheb_degree = 3;
  REQUIRE(run_cfg(cfg).out == "[0, -3, 0, 4]\n");
  cfg.cheb_kind = "u";
  cfg.cheb_degree = -1;
  REQUIRE(run_cfg(cfg).out == "[0]\n");
  cfg.cheb_kind = "z";
  REQUIRE(run_cfg(cfg).code == 2);
}

TEST_CASE("conv command") {
  CliConfig cfg;
  cfg.command = Command::conv;
  cfg.f_name = "lucas";
  cfg.g_name = "jacobsthal";
  cfg.conv_r = 1;
  cfg.conv_n = 1;
  REQUIRE(run_cfg(cfg).out == "2\n");
  cfg.conv_n = -1;
  REQUIRE(run_cfg(cfg).code == 2);
}

TEST_CASE("list command") {
  CliConfig cfg;
  cfg.command = Command::list;
  cfg.format = OutputFormat::json;
  auto res = run_cfg(cfg);
  REQUIRE(res.code == 0);
  // one JSON record per catalog entry
  std::istringstream lines(res.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    REQUIRE(j.contains("id"));
    REQUIRE(j.contains("provenance"));
    REQUIRE(j.contains("scalar_domain"));
    REQUIRE(j.contains("anchor"));
    ++count;
  }
  REQUIRE(count == builtin_catalog().size());

  cfg.ids = {"eq6_lucas_jacobsthal"};
  res = run_cfg(cfg);
  REQUIRE(res.out.find("eq6_lucas_jacobsthal") != std::string::npos);

  cfg.ids = {"no_such_id"};
  REQUIRE(run_cfg(cfg).code == 2);
}

TEST_CASE("verify exits 0 on the theorem-derived catalog") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.tags = {"theorem-derived"};
  cfg.r_range = {1, 3};
  cfg.n_range = {0, 8};
  cfg.format = OutputFormat::json;
  cfg.no_header = true;
  const auto res = run_cfg(cfg);
  REQUIRE(res.code == 0);
  // every line must be valid JSON with the record schema
  std::istringstream lines(res.out);
  std::string line;
  bool saw_cell = false;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j.contains("identity") && !j.contains("summary")) {
      for (const char* key : {"identity", "r", "n", "status", "lhs", "rhs", "reason"})
        REQUIRE(j.contains(key));
      saw_cell = true;
    }
  }
  REQUIRE(saw_cell);
}

TEST_CASE("verify exits 1 when an as-printed entry fails") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.ids = {"pelljac_example_r1"};
  cfg.r_range = {1, 1};
  cfg.n_range = {0, 5};
  cfg.no_header = true;
  REQUIRE(run_cfg(cfg).code == 1);
}

TEST_CASE("verify rejects unknown ids") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.ids = {"bogus"};
  const auto res = run_cfg(cfg);
  REQUIRE(res.code == 2);
  REQUIRE(res.err.find("unknown identity id") != std::string::npos);
}

TEST_CASE("verify output is deterministic and worker-count independent") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.tags = {"chebyshev"};
  cfg.r_range = {1, 2};
  cfg.n_range = {0, 6};
  cfg.format = OutputFormat::json;
  cfg.no_header = true;
  cfg.workers = 1;
  const auto a = run_cfg(cfg);
  const auto b = run_cfg(cfg);
  REQUIRE(a.out == b.out);
  cfg.workers = 3;
  const auto c = run_cfg(cfg);
  REQUIRE(a.out == c.out);
  REQUIRE(a.code == c.code);
}

TEST_CASE("fail-fast emits the failing record last") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.ids = {"seiffert_fib_pell"};
  cfg.r_range = {1, 1};
  cfg.n_range = {0, 10};
  cfg.format = OutputFormat::csv;
  cfg.fail_fast = true;
  cfg.no_header = true;
  const auto res = run_cfg(cfg);
  REQUIRE(res.code == 1);
  // csv: header + exactly one cell (the identity fails at its first cell)
  std::istringstream lines(res.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  REQUIRE(all.size() == 2);
  REQUIRE(all[0] == "identity,r,n,status,lhs,rhs,reason");
  REQUIRE(all[1].find("fail") != std::string::npos);
  REQUIRE(all[1].find("seiffert_fib_pell,1,0") == 0);
}

TEST_CASE("table format carries the same cells as json") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.ids = {"eq1_fib_fib"};
  cfg.r_range = {1, 1};
  cfg.n_range = {0, 4};
  cfg.no_header = true;
  cfg.format = OutputFormat::table;
  const auto res = run_cfg(cfg);
  REQUIRE(res.code == 0);
  for (int n = 0; n <= 4; ++n)
    REQUIRE(res.out.find("eq1_fib_fib  r=1 n=" + std::to_string(n) + "  pass") !=
            std::string::npos);
}

TEST_CASE("header line is optional") {
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.ids = {"eq3_lucas_fib"};
  cfg.r_range = {1, 1};
  cfg.n_range = {0, 1};
  cfg.format = OutputFormat::table;
  cfg.no_header = false;
  REQUIRE(run_cfg(cfg).out.rfind("# seqconv verify", 0) == 0);
  cfg.no_header = true;
  REQUIRE(run_cfg(cfg).out.rfind("eq3_lucas_fib", 0) == 0);
}

TEST_CASE("catalog override feeds injected entries through the cli") {
  std::vector<IdentityEntry> entries = {builtin_catalog().front()};
  IdentityEntry bad = entries[0];
  bad.id = "injected_perturbed";
  bad.rhs = [inner = entries[0].rhs](long long r, long long n) {
    return inner(r, n) + ExactScalar(1);
  };
  entries.push_back(bad);
  CliConfig cfg;
  cfg.command = Command::verify;
  cfg.r_range = {1, 1};
  cfg.n_range = {0, 3};
  cfg.no_header = true;
  const auto res = run_cfg(cfg, &entries);
  REQUIRE(res.code == 1);
  REQUIRE(res.out.find("injected_perturbed") != std::string::npos);
}
