#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "orbitsum/cli.hpp"

namespace {

using orbitsum::cli::RunConfig;

void add_tuple_options(CLI::App* cmd, std::string& m_text, std::vector<std::string>& parts,
                       std::string& kind, std::string& format, RunConfig& cfg) {
  cmd->add_option("--m", m_text, "dimension m of su(m) / SU(m)")->required();
  cmd->add_option("--parts", parts,
                  "eigenvalue multiplicities of one orbit, e.g. 2,1,1 "
                  "(repeat per orbit; nonincreasing)");
  cmd->add_option("--case", kind, "algebra (adjoint orbits) or group (conjugacy classes)")
      ->check(CLI::IsMember({"algebra", "group"}));
  cmd->add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--output", cfg.output_path, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitsum: openness and L2 classification of sums of adjoint orbits in su(m)\n"
               "and products of conjugacy classes in SU(m), with a randomized numeric check"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string m_text, k_text, kind = "algebra", format;
  std::vector<std::string> parts_texts;

  auto* classify = app.add_subcommand("classify", "classify one tuple of orbits");
  format = "json";
  std::string classify_format = "json";
  add_tuple_options(classify, m_text, parts_texts, kind, classify_format, cfg);

  auto* scan = app.add_subcommand("scan", "classify every tuple over ranges of m and k");
  std::string scan_format = "csv";
  scan->add_option("--m", m_text, "m or inclusive range m_lo..m_hi")->required();
  scan->add_option("--k", k_text, "k or inclusive range k_lo..k_hi")->required();
  scan->add_option("--case", kind)->check(CLI::IsMember({"algebra", "group"}));
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv", "table"}));
  scan->add_option("--output", cfg.output_path);
  scan->add_option("--threads", cfg.threads, "worker threads (0 = hardware)")
      ->envname("ORBITSUM_THREADS");

  auto* oracle = app.add_subcommand("oracle", "randomized numeric verification of one tuple");
  std::string oracle_format = "json";
  add_tuple_options(oracle, m_text, parts_texts, kind, oracle_format, cfg);
  oracle->add_option("--samples", cfg.samples, "number of random conjugator tuples");
  oracle->add_option("--tol", cfg.tol, "singular value threshold for the rank cut");
  oracle->add_option("--seed", cfg.seed, "seed for the deterministic sample streams");
  oracle->add_option("--threads", cfg.threads, "worker threads (0 = hardware)")
      ->envname("ORBITSUM_THREADS");

  auto* witness = app.add_subcommand("witness", "emit an explicit singularity certificate");
  std::string witness_format = "json";
  add_tuple_options(witness, m_text, parts_texts, kind, witness_format, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : orbitsum::cli::kExitUsage;
  }

  try {
    cfg.kind = orbitsum::rootsys::case_kind_from_string(kind);
    if (scan->parsed()) {
      cfg.command = "scan";
      cfg.format = orbitsum::cli::output_format_from_string(scan_format);
      std::tie(cfg.m_lo, cfg.m_hi) = orbitsum::cli::parse_range(m_text);
      std::tie(cfg.k_lo, cfg.k_hi) = orbitsum::cli::parse_range(k_text);
    } else {
      cfg.m = std::stoi(m_text);
      for (const auto& text : parts_texts) {
        cfg.parts.push_back(orbitsum::cli::parse_parts(text));
      }
      if (classify->parsed()) {
        cfg.command = "classify";
        cfg.format = orbitsum::cli::output_format_from_string(classify_format);
      } else if (oracle->parsed()) {
        cfg.command = "oracle";
        cfg.format = orbitsum::cli::output_format_from_string(oracle_format);
      } else {
        cfg.command = "witness";
        cfg.format = orbitsum::cli::output_format_from_string(witness_format);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return orbitsum::cli::kExitUsage;
  }

  return orbitsum::cli::run_command(cfg, std::cerr);
}
