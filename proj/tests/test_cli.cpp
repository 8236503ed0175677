#include <doctest.h>

#include <sstream>

#include "orbitsum/cli.hpp"
#include "orbitsum/json_io.hpp"

using namespace orbitsum::cli;
using orbitsum::io::json;

namespace {

RunConfig base_config(std::string command, int m, std::vector<std::vector<int>> parts) {
  RunConfig cfg;
  cfg.command = std::move(command);
  cfg.m = m;
  cfg.parts = std::move(parts);
  return cfg;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = -1;
  if (cfg.command == "classify") code = run_classify(cfg, out, err);
  if (cfg.command == "scan") code = run_scan(cfg, out, err);
  if (cfg.command == "oracle") code = run_oracle(cfg, out, err);
  if (cfg.command == "witness") code = run_witness(cfg, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("flag parsing helpers") {
  CHECK(parse_parts("2,1,1") == std::vector<int>{2, 1, 1});
  CHECK_THROWS(parse_parts(""));
  CHECK_THROWS(parse_parts("2,x"));
  CHECK(parse_range("4") == std::pair<int, int>{4, 4});
  CHECK(parse_range("2..8") == std::pair<int, int>{2, 8});
  CHECK(output_format_from_string("table") == OutputFormat::table);
  CHECK_THROWS_AS(output_format_from_string("xml"), std::invalid_argument);
}

TEST_CASE("classify exit codes and round trip") {
  SUBCASE("open tuple exits 0 and re-parses") {
    const Result r = run(base_config("classify", 4, {{2, 2}, {2, 1, 1}}));
    CHECK(r.code == kExitOpen);
    const json doc = json::parse(r.out);
    CHECK(doc.at("schema") == 1);
    const auto verdict = orbitsum::io::parse_verdict(doc.at("verdict"));
    CHECK(verdict.is_open());
    CHECK(orbitsum::io::to_json(verdict).dump() == doc.at("verdict").dump());
  }
  SUBCASE("singular tuple exits 3 with a witness in the report") {
    const Result r = run(base_config("classify", 4, {{2, 2}, {2, 2}}));
    CHECK(r.code == kExitSingular);
    const json doc = json::parse(r.out);
    CHECK(doc.at("verdict").at("classification") == "Singular");
    CHECK(doc.at("verdict").contains("witness"));
  }
  SUBCASE("bad partitions exit 2") {
    CHECK(run(base_config("classify", 4, {{3, 2}})).code == kExitUsage);
    CHECK(run(base_config("classify", 4, {})).code == kExitUsage);
    CHECK(run(base_config("classify", 30, {{30}})).code == kExitUsage);
    CHECK(run(base_config("classify", 4, {{1, 2, 1}})).code == kExitUsage);
  }
}

TEST_CASE("scan output and exits") {
  RunConfig cfg;
  cfg.command = "scan";
  cfg.m_lo = cfg.m_hi = 4;
  cfg.k_lo = cfg.k_hi = 2;
  cfg.format = OutputFormat::csv;

  const Result r = run(cfg);
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,k,partitions,classification,sum_q,bound,exception,open_general,l2,agree");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 15);  // multisets of 2 from the 5 partitions of 4

  SUBCASE("ranges are guarded") {
    cfg.m_lo = cfg.m_hi = 30;
    CHECK(run(cfg).code == kExitUsage);
    cfg.m_lo = cfg.m_hi = 4;
    cfg.k_lo = cfg.k_hi = 9;
    CHECK(run(cfg).code == kExitUsage);
  }

  SUBCASE("scan output is deterministic") {
    cfg.threads = 4;
    const Result again = run(cfg);
    CHECK(again.out == r.out);
  }
}

TEST_CASE("oracle exit codes") {
  RunConfig cfg = base_config("oracle", 4, {{2, 2}, {2, 2}});
  cfg.samples = 8;
  cfg.seed = 7;
  const Result r = run(cfg);
  CHECK(r.code == kExitOk);  // SingularEvidence agrees with the exact verdict
  const json doc = json::parse(r.out);
  CHECK(doc.at("oracle").at("outcome") == "SingularEvidence");
  CHECK(doc.at("agree") == true);

  RunConfig open_cfg = base_config("oracle", 2, {{1, 1}, {1, 1}});
  open_cfg.samples = 8;
  open_cfg.seed = 7;
  const Result open_result = run(open_cfg);
  CHECK(open_result.code == kExitOk);
  CHECK(json::parse(open_result.out).at("oracle").at("outcome") == "OpenCertificate");

  RunConfig guard = base_config("oracle", 9, {{9}});
  guard.m = 9;
  CHECK(run(guard).code == kExitUsage);
}

TEST_CASE("oracle reports are byte identical for a fixed seed") {
  RunConfig cfg = base_config("oracle", 3, {{2, 1}, {2, 1}});
  cfg.samples = 12;
  cfg.seed = 2024;
  cfg.threads = 1;
  const Result first = run(cfg);
  cfg.threads = 4;
  const Result second = run(cfg);
  CHECK(first.out == second.out);
  CHECK(first.code == second.code);
}

TEST_CASE("witness exit codes") {
  const Result singular = run(base_config("witness", 4, {{2, 2}, {2, 2}}));
  CHECK(singular.code == kExitOk);
  CHECK(json::parse(singular.out).at("witness").at("family") == "parity");
  CHECK(json::parse(singular.out).at("verified") == true);

  const Result open_result = run(base_config("witness", 4, {{2, 2}, {2, 1, 1}}));
  CHECK(open_result.code == kExitSingular);
  CHECK(json::parse(open_result.out).at("witness").is_null());

  const Result family1 = run(base_config("witness", 3, {{2, 1}, {2, 1}}));
  CHECK(family1.code == kExitOk);
  CHECK(json::parse(family1.out).at("witness").at("family") == "linear");
}
