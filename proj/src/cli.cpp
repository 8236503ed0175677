#include "orbitsum/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "orbitsum/classify.hpp"
#include "orbitsum/json_io.hpp"
#include "orbitsum/oracle.hpp"
#include "orbitsum/sweep.hpp"
#include "orbitsum/witness.hpp"

namespace orbitsum::cli {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string parts_brackets(const std::vector<int>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

std::string tuple_text(const rootsys::OrbitTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.partitions().size(); ++i) {
    if (i) out += ';';
    out += parts_brackets(t.partitions()[i].parts());
  }
  return out;
}

constexpr const char* kCsvHeader = "m,k,partitions,classification,sum_q,bound,exception,open_general,l2,agree";

std::string csv_row(const ScanRow& row) {
  std::ostringstream line;
  line << row.tuple.m() << ',' << row.tuple.k() << ',' << csv_quote(tuple_text(row.tuple)) << ','
       << criteria::to_string(row.su.classification) << ',' << row.su.theorem1.sum_q << ','
       << row.su.theorem1.bound << ',' << (row.su.theorem1.exception ? "true" : "false") << ','
       << (row.open_general ? "true" : "false") << ',' << (row.l2 ? "true" : "false") << ','
       << (row.agree ? "true" : "false");
  return line.str();
}

json scan_row_json(const ScanRow& row) {
  json partitions = json::array();
  for (const auto& p : row.tuple.partitions()) partitions.push_back(p.parts());
  return json{{"m", row.tuple.m()},
              {"k", row.tuple.k()},
              {"partitions", partitions},
              {"classification", criteria::to_string(row.su.classification)},
              {"sum_q", row.su.theorem1.sum_q},
              {"bound", row.su.theorem1.bound},
              {"exception", row.su.theorem1.exception},
              {"open_general", row.open_general},
              {"l2", row.l2},
              {"agree", row.agree}};
}

json tuple_json(const rootsys::OrbitTuple& t) {
  json partitions = json::array();
  for (const auto& p : t.partitions()) partitions.push_back(p.parts());
  return partitions;
}

void print_margin_table(std::ostream& out, const std::vector<criteria::MarginRow>& margins) {
  out << "  shape            lhs <= rhs   corank  lhs_min\n";
  for (const auto& row : margins) {
    std::ostringstream shape;
    shape << parts_brackets(row.shape.blocks());
    out << "  " << std::left << std::setw(15) << shape.str() << std::right << std::setw(5)
        << row.lhs << " <= " << std::left << std::setw(6) << row.rhs << std::right << std::setw(4)
        << row.corank << std::setw(9) << row.lhs_min << (row.holds() ? "" : "   VIOLATED")
        << '\n';
  }
}

std::optional<rootsys::OrbitTuple> build_tuple(const RunConfig& cfg, std::ostream& err) {
  if (cfg.m < 2 || cfg.m > kMaxCombinatorialM) {
    err << "error: --m must be between 2 and " << kMaxCombinatorialM << "\n";
    return std::nullopt;
  }
  if (cfg.parts.empty()) {
    err << "error: at least one --parts list is required\n";
    return std::nullopt;
  }
  std::vector<rootsys::MultiplicityPartition> partitions;
  try {
    for (const auto& parts : cfg.parts) {
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
          throw std::invalid_argument("parts must be in nonincreasing order");
        }
      }
      partitions.emplace_back(parts);
      if (partitions.back().m() != cfg.m) {
        std::ostringstream msg;
        msg << "parts " << parts_brackets(parts) << " sum to " << partitions.back().m()
            << ", expected m = " << cfg.m;
        throw std::invalid_argument(msg.str());
      }
    }
    return rootsys::OrbitTuple(std::move(partitions), cfg.kind);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown output format: " + name);
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad parts entry: " + token);
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty parts list");
  return parts;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int value = std::stoi(text);
    return {value, value};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto tuple = build_tuple(cfg, err);
  if (!tuple) return kExitUsage;
  const criteria::Verdict verdict = criteria::dichotomy_classify(*tuple);

  switch (cfg.format) {
    case OutputFormat::json: {
      json doc{{"schema", 1},
               {"command", "classify"},
               {"m", tuple->m()},
               {"case", rootsys::to_string(tuple->kind())},
               {"partitions", tuple_json(*tuple)},
               {"verdict", io::to_json(verdict)}};
      emit(out, doc);
      break;
    }
    case OutputFormat::csv: {
      const ScanRow row{*tuple, verdict, criteria::open_check_general(*tuple).ok,
                        criteria::l2_check(*tuple).ok, false};
      out << kCsvHeader << '\n' << csv_row(row) << '\n';
      break;
    }
    case OutputFormat::table: {
      out << "tuple          : " << tuple_text(*tuple) << " (m = " << tuple->m()
          << ", case = " << rootsys::to_string(tuple->kind()) << ")\n";
      out << "classification : " << criteria::to_string(verdict.classification) << '\n';
      out << "measure class  : " << criteria::to_string(verdict.measure_class) << '\n';
      out << "sum q / bound  : " << verdict.theorem1.sum_q << " / " << verdict.theorem1.bound
          << (verdict.theorem1.exception ? "  (exceptional pair)" : "") << '\n';
      if (!verdict.margins.empty()) {
        out << (verdict.is_open() ? "margins over all proper shapes:\n"
                                  : "margins over corank-one shapes:\n");
        print_margin_table(out, verdict.margins);
      }
      if (verdict.witness) {
        out << "witness        : "
            << (verdict.witness->family == criteria::WitnessFamily::linear ? "linear" : "parity")
            << " family, verified\n";
      }
      break;
    }
  }
  return verdict.is_open() ? kExitOpen : kExitSingular;
}

int run_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.m_lo < 2 || cfg.m_hi > kMaxCombinatorialM || cfg.m_lo > cfg.m_hi) {
    err << "error: scan m range must stay within 2.." << kMaxCombinatorialM << "\n";
    return kExitUsage;
  }
  if (cfg.k_lo < 1 || cfg.k_hi > kMaxScanK || cfg.k_lo > cfg.k_hi) {
    err << "error: scan k range must stay within 1.." << kMaxScanK << "\n";
    return kExitUsage;
  }
  // rows are streamed: the largest allowed ranges produce tens of millions
  // of tuples
  bool all_agree = true;
  std::size_t rows = 0;

  switch (cfg.format) {
    case OutputFormat::json: {
      out << "{\n  \"schema\": 1,\n  \"command\": \"scan\",\n  \"case\": \""
          << rootsys::to_string(cfg.kind) << "\",\n  \"rows\": [";
      stream_sweep(cfg.m_lo, cfg.m_hi, cfg.k_lo, cfg.k_hi, cfg.kind, cfg.threads,
                   [&](const ScanRow& row) {
                     all_agree = all_agree && row.agree;
                     out << (rows++ ? ",\n    " : "\n    ") << scan_row_json(row).dump();
                   });
      out << (rows ? "\n  " : "") << "],\n  \"all_agree\": " << (all_agree ? "true" : "false")
          << "\n}\n";
      break;
    }
    case OutputFormat::csv: {
      out << kCsvHeader << '\n';
      stream_sweep(cfg.m_lo, cfg.m_hi, cfg.k_lo, cfg.k_hi, cfg.kind, cfg.threads,
                   [&](const ScanRow& row) {
                     all_agree = all_agree && row.agree;
                     ++rows;
                     out << csv_row(row) << '\n';
                   });
      break;
    }
    case OutputFormat::table: {
      out << "m  k  classification  agree  tuple\n";
      stream_sweep(cfg.m_lo, cfg.m_hi, cfg.k_lo, cfg.k_hi, cfg.kind, cfg.threads,
                   [&](const ScanRow& row) {
                     all_agree = all_agree && row.agree;
                     ++rows;
                     out << row.tuple.m() << "  " << row.tuple.k() << "  " << std::left
                         << std::setw(14) << criteria::to_string(row.su.classification)
                         << std::right << "  " << (row.agree ? "yes" : "NO ") << "   "
                         << tuple_text(row.tuple) << '\n';
                   });
      out << rows << " tuples, " << (all_agree ? "all criteria agree" : "DISAGREEMENT FOUND")
          << '\n';
      break;
    }
  }
  return all_agree ? kExitOk : kExitInconsistent;
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.m > kMaxOracleM) {
    err << "error: oracle limited to m <= " << kMaxOracleM << "\n";
    return kExitUsage;
  }
  if (cfg.samples < 1) {
    err << "error: --samples must be positive\n";
    return kExitUsage;
  }
  if (cfg.tol <= 0.0) {
    err << "error: --tol must be positive\n";
    return kExitUsage;
  }
  const auto tuple = build_tuple(cfg, err);
  if (!tuple) return kExitUsage;

  const criteria::Verdict combinatorial = criteria::su_classify(*tuple);
  const oracle::OracleVerdict numeric =
      oracle::numeric_classify(*tuple, cfg.samples, cfg.tol, cfg.seed, cfg.threads);

  const bool inconclusive = numeric.outcome == oracle::OracleOutcome::Inconclusive;
  const bool agree =
      (numeric.outcome == oracle::OracleOutcome::OpenCertificate && combinatorial.is_open()) ||
      (numeric.outcome == oracle::OracleOutcome::SingularEvidence && !combinatorial.is_open());

  switch (cfg.format) {
    case OutputFormat::json: {
      json doc{{"schema", 1},
               {"command", "oracle"},
               {"m", tuple->m()},
               {"case", rootsys::to_string(tuple->kind())},
               {"partitions", tuple_json(*tuple)},
               {"combinatorial", io::to_json(combinatorial)},
               {"oracle", io::to_json(numeric)},
               {"agree", agree}};
      emit(out, doc);
      break;
    }
    case OutputFormat::csv:
    case OutputFormat::table: {
      out << "tuple     : " << tuple_text(*tuple) << " (case " << rootsys::to_string(tuple->kind())
          << ")\n";
      out << "exact     : " << criteria::to_string(combinatorial.classification) << '\n';
      out << "oracle    : " << oracle::to_string(numeric.outcome) << " over " << numeric.samples
          << " samples (seed " << numeric.seed << ", tol " << numeric.tol << ")\n";
      out << "dims seen :";
      for (const auto& [dim, count] : numeric.dimension_histogram) {
        out << ' ' << dim << 'x' << count;
      }
      out << '\n';
      out << "agreement : " << (agree ? "yes" : (inconclusive ? "inconclusive" : "NO")) << '\n';
      break;
    }
  }
  if (inconclusive) return kExitInconclusive;
  return agree ? kExitOk : kExitDisagreement;
}

int run_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto tuple = build_tuple(cfg, err);
  if (!tuple) return kExitUsage;

  const auto witness = criteria::singular_witness(*tuple);
  bool verified = false;
  if (witness) verified = criteria::verify_witness(*witness);

  switch (cfg.format) {
    case OutputFormat::json: {
      json doc{{"schema", 1},
               {"command", "witness"},
               {"m", tuple->m()},
               {"case", rootsys::to_string(tuple->kind())},
               {"partitions", tuple_json(*tuple)},
               {"witness", witness ? io::to_json(*witness) : json(nullptr)},
               {"verified", verified}};
      emit(out, doc);
      break;
    }
    case OutputFormat::csv:
    case OutputFormat::table: {
      if (!witness) {
        out << "none\n";
        break;
      }
      out << "family   : "
          << (witness->family == criteria::WitnessFamily::linear ? "linear" : "parity") << '\n';
      out << "psi      : ";
      for (const auto& block : witness->shape_blocks) out << parts_brackets(block);
      out << '\n';
      for (std::size_t i = 0; i < witness->arrangements.size(); ++i) {
        out << "orbit " << i + 1 << "  : ";
        for (const auto& cls : witness->arrangements[i]) out << parts_brackets(cls);
        out << '\n';
      }
      out << "verified : " << (verified ? "yes" : "NO") << '\n';
      break;
    }
  }
  if (!witness) return kExitSingular;  // open tuple: no witness expected
  return verified ? kExitOk : kExitDisagreement;
}

int run_command(const RunConfig& cfg, std::ostream& err) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      err << "error: cannot open output file " << cfg.output_path << "\n";
      return kExitUsage;
    }
    out = &file;
  }

  try {
    if (cfg.command == "classify") return run_classify(cfg, *out, err);
    if (cfg.command == "scan") return run_scan(cfg, *out, err);
    if (cfg.command == "oracle") return run_oracle(cfg, *out, err);
    if (cfg.command == "witness") return run_witness(cfg, *out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace orbitsum::cli
