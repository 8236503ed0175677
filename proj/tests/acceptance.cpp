// Acceptance suite: every release criterion as an executable check, one
// PASS/FAIL line each. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbitsum/classify.hpp"
#include "orbitsum/crossing.hpp"
#include "orbitsum/json_io.hpp"
#include "orbitsum/oracle.hpp"
#include "orbitsum/sweep.hpp"
#include "orbitsum/witness.hpp"

using namespace orbitsum;
using rootsys::CaseKind;
using rootsys::MultiplicityPartition;
using rootsys::OrbitTuple;
using rootsys::SubsystemShape;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

OrbitTuple tuple(std::vector<std::vector<int>> parts, CaseKind kind = CaseKind::algebra) {
  std::vector<MultiplicityPartition> ps;
  for (auto& p : parts) ps.emplace_back(std::move(p));
  return OrbitTuple(std::move(ps), kind);
}

bool is_singular(const OrbitTuple& t) {
  return criteria::su_classify(t).classification == criteria::Classification::Singular;
}

void for_all_multisets(int m, int k_lo, int k_hi,
                       const std::function<void(const OrbitTuple&)>& visit) {
  const auto partitions = rootsys::enumerate_partitions(m);
  const int count = static_cast<int>(partitions.size());
  for (int k = k_lo; k <= k_hi; ++k) {
    std::vector<int> pick(k, 0);
    while (true) {
      std::vector<MultiplicityPartition> chosen;
      chosen.reserve(k);
      for (int idx : pick) chosen.push_back(partitions[idx]);
      visit(OrbitTuple(std::move(chosen), CaseKind::algebra));
      int slot = k - 1;
      while (slot >= 0 && pick[slot] == count - 1) --slot;
      if (slot < 0) break;
      const int next = pick[slot] + 1;
      for (int i = slot; i < k; ++i) pick[i] = next;
    }
  }
}

bool criterion_regressions(std::string& detail) {
  bool ok = true;
  auto expect = [&](const OrbitTuple& t, bool singular, const std::string& label) {
    if (is_singular(t) != singular) {
      ok = false;
      detail += " FAILED:" + label;
    }
  };
  expect(tuple({{2, 2}, {2, 2}}), true, "m4-exception");
  expect(tuple({{2, 2}, {2, 1, 1}}), false, "m4-open");
  expect(tuple({{2, 1}, {2, 1}}), true, "m3-singular");
  expect(tuple({{1, 1}, {1, 1}}), false, "su2-open");
  for (int m = 2; m <= 8; ++m) {
    for (const auto& p : rootsys::enumerate_partitions(m)) {
      expect(OrbitTuple({p}, CaseKind::algebra), true, "k1");
    }
  }
  for (int r = 1; r <= 3; ++r) {
    const int half = r + 1;
    expect(tuple({{half, half}, {half, half}}), true, "exception-r" + std::to_string(r));
  }
  if (ok) detail = "all verdicts exact";
  return ok;
}

bool criterion_equivalence_sweep(std::string& detail) {
  const auto rows = cli::run_sweep(2, 8, 2, 4, CaseKind::algebra, 0);
  std::size_t bad = 0;
  for (const auto& row : rows) {
    const bool open = row.su.is_open();
    if (row.open_general != open || row.l2 != open) ++bad;
  }
  std::ostringstream msg;
  msg << rows.size() << " tuples, " << bad << " disagreements";
  detail = msg.str();
  return bad == 0;
}

bool criterion_dp_vs_brute_force(std::string& detail) {
  std::size_t pairs = 0, bad = 0;
  for (int m = 2; m <= 7; ++m) {
    std::vector<SubsystemShape> shapes = rootsys::enumerate_proper_shapes(m);
    shapes.push_back(SubsystemShape({m}));
    for (const auto& p : rootsys::enumerate_partitions(m)) {
      for (const auto& s : shapes) {
        ++pairs;
        if (criteria::max_crossing(p, s).value != criteria::brute_force_max_crossing(p, s)) ++bad;
        if (criteria::min_crossing(p, s) != criteria::brute_force_min_crossing(p, s)) ++bad;
      }
    }
  }
  std::ostringstream msg;
  msg << pairs << " pairs, " << bad << " mismatches";
  detail = msg.str();
  return bad == 0;
}

bool criterion_crossing_bound(std::string& detail) {
  std::size_t pairs = 0, bad = 0;
  for (int m = 2; m <= 10; ++m) {
    for (const auto& p : rootsys::enumerate_partitions(m)) {
      for (const auto& s : rootsys::enumerate_corank_one_shapes(m)) {
        ++pairs;
        const auto bound = criteria::crossing_bound(p, s);
        const int value = criteria::max_crossing(p, s).value;
        if (!bound.admits(value)) ++bad;
        if (bound.attained_by(value) != bound.equality_possible) ++bad;
      }
    }
  }
  std::ostringstream msg;
  msg << pairs << " pairs, " << bad << " violations";
  detail = msg.str();
  return bad == 0;
}

bool criterion_witness_soundness(std::string& detail) {
  std::size_t tuples = 0, bad = 0;
  for (int m = 2; m <= 8; ++m) {
    for_all_multisets(m, 1, 4, [&](const OrbitTuple& t) {
      ++tuples;
      const bool singular = is_singular(t);
      const auto w = criteria::singular_witness(t);
      if (w.has_value() != singular) {
        ++bad;
        return;
      }
      if (w && !criteria::verify_witness(*w)) ++bad;
    });
  }
  std::ostringstream msg;
  msg << tuples << " tuples, " << bad << " witness defects";
  detail = msg.str();
  return bad == 0;
}

bool criterion_numeric_agreement(std::string& detail) {
  std::size_t tuples = 0, bad_verdicts = 0, bad_dims = 0;
  for (int m = 2; m <= 5; ++m) {
    const auto partitions = rootsys::enumerate_partitions(m);
    for (int k = 2; k <= 3; ++k) {
      for_all_multisets(m, k, k, [&](const OrbitTuple& algebra_tuple) {
        for (const CaseKind kind : {CaseKind::algebra, CaseKind::group}) {
          const OrbitTuple t(algebra_tuple.partitions(), kind);
          ++tuples;
          const auto numeric = oracle::numeric_classify(t, 32, 1e-8, 42, 0);
          const bool open = !is_singular(t);
          const bool agrees =
              (open && numeric.outcome == oracle::OracleOutcome::OpenCertificate) ||
              (!open && numeric.outcome == oracle::OracleOutcome::SingularEvidence);
          if (!agrees) ++bad_verdicts;
        }
      });
    }
  }
  for (int m = 2; m <= 8; ++m) {
    for (const auto& p : rootsys::enumerate_partitions(m)) {
      int expected = -1;
      for (int w : p.parts()) expected += w * w;
      if (oracle::centralizer_basis(oracle::algebra_representative(p)).dim() != expected) ++bad_dims;
      if (oracle::centralizer_basis(oracle::group_representative(p)).dim() != expected) ++bad_dims;
    }
  }
  std::ostringstream msg;
  msg << tuples << " oracle runs, " << bad_verdicts << " disagreements, " << bad_dims
      << " centralizer dimension errors";
  detail = msg.str();
  return bad_verdicts == 0 && bad_dims == 0;
}

bool criterion_exception_depth(std::string& detail) {
  const auto singular = oracle::numeric_classify(tuple({{2, 2}, {2, 2}}), 100, 1e-8, 31337, 0);
  int singular_confident = 0;
  for (const auto& record : singular.per_sample) {
    if (record.dimension >= 1 && record.gap_ratio >= 1e4) ++singular_confident;
  }
  const auto open = oracle::numeric_classify(tuple({{2, 2}, {2, 1, 1}}), 100, 1e-8, 31337, 0);
  int open_zero = 0;
  for (const auto& record : open.per_sample) {
    if (record.dimension == 0) ++open_zero;
  }
  std::ostringstream msg;
  msg << "exceptional pair: " << singular_confident << "/100 confidently nontrivial; "
      << "open tuple: " << open_zero << "/100 trivial";
  detail = msg.str();
  return singular_confident == 100 && open_zero >= 99;
}

#ifndef ORBITSUM_CLI_BIN
#define ORBITSUM_CLI_BIN ""
#endif

bool criterion_cli_determinism(std::string& detail) {
  const std::string binary = ORBITSUM_CLI_BIN;
  if (binary.empty() || !std::filesystem::exists(binary)) {
    detail = "CLI binary not found";
    return false;
  }
  const auto dir = std::filesystem::temp_directory_path();
  const std::string first = (dir / "orbitsum_oracle_run1.json").string();
  const std::string second = (dir / "orbitsum_oracle_run2.json").string();
  const std::string flags = " oracle --m 4 --parts 2,2 --parts 2,2 --samples 16 --seed 7 --output ";
  if (std::system((binary + flags + first).c_str()) != 0 ||
      std::system((binary + flags + second).c_str()) != 0) {
    detail = "oracle run failed";
    return false;
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  std::ostringstream msg;
  msg << a.size() << " bytes, " << (a == b ? "identical" : "DIFFERENT");
  detail = msg.str();
  return !a.empty() && a == b;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 exact verdict regression set", criterion_regressions},
      {"2 criterion equivalence sweep (m<=8, k<=4)", criterion_equivalence_sweep},
      {"3 optimizer vs brute force (m<=7)", criterion_dp_vs_brute_force},
      {"4 crossing bound with exact equality cases (m<=10)", criterion_crossing_bound},
      {"5 witness soundness (m<=8, k<=4)", criterion_witness_soundness},
      {"6 numeric agreement (m<=5) and centralizer dims (m<=8)", criterion_numeric_agreement},
      {"7 exception family oracle depth (100 samples)", criterion_exception_depth},
      {"8 oracle report determinism (CLI, fixed seed)", criterion_cli_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.name << ": " << detail
              << " (" << elapsed << " ms)" << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
