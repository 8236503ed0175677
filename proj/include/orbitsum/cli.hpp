#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbitsum/rootsys.hpp"

namespace orbitsum::cli {

/// Exit codes shared by all subcommands. Distinct codes so shell pipelines
/// can branch on the verdict.
inline constexpr int kExitOpen = 0;
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSingular = 3;
inline constexpr int kExitDisagreement = 4;
inline constexpr int kExitInconclusive = 5;

enum class OutputFormat { json, csv, table };

OutputFormat output_format_from_string(const std::string& name);

struct RunConfig {
  std::string command;
  int m = 0;
  std::vector<std::vector<int>> parts;
  int m_lo = 0, m_hi = 0;  // scan
  int k_lo = 0, k_hi = 0;  // scan
  rootsys::CaseKind kind = rootsys::CaseKind::algebra;
  int samples = 32;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty = stdout
  int threads = 0;          // 0 = hardware
};

/// Guards shared with the documentation: combinatorial commands accept
/// m <= 12 (and k <= 5 for scans), the numeric oracle m <= 8.
inline constexpr int kMaxCombinatorialM = 12;
inline constexpr int kMaxScanK = 5;
inline constexpr int kMaxOracleM = 8;

/// "a,b,..." -> parts; requires canonical nonincreasing order.
std::vector<int> parse_parts(const std::string& text);

/// "a" or "a..b" -> inclusive range.
std::pair<int, int> parse_range(const std::string& text);

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatch on cfg.command; resolves the output stream (stdout or
/// cfg.output_path) and maps internal errors to exit codes.
int run_command(const RunConfig& cfg, std::ostream& err);

}  // namespace orbitsum::cli
