#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "orbitsum/classify.hpp"
#include "orbitsum/crossing.hpp"
#include "orbitsum/json_io.hpp"
#include "orbitsum/oracle.hpp"
#include "orbitsum/cli.hpp"
#include "orbitsum/sweep.hpp"
#include "orbitsum/witness.hpp"

namespace py = pybind11;
using namespace orbitsum;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
  const auto dumped = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return nlohmann::json::parse(dumped);
}

rootsys::OrbitTuple make_orbit_tuple(const std::vector<std::vector<int>>& partitions,
                                     const std::string& kind) {
  std::vector<rootsys::MultiplicityPartition> ps;
  ps.reserve(partitions.size());
  for (const auto& parts : partitions) ps.emplace_back(parts);
  return rootsys::OrbitTuple(std::move(ps), rootsys::case_kind_from_string(kind));
}

py::object scan_rows_to_py(const std::vector<cli::ScanRow>& rows) {
  py::list out;
  for (const auto& row : rows) {
    py::dict d;
    d["m"] = row.tuple.m();
    d["k"] = row.tuple.k();
    py::list partitions;
    for (const auto& p : row.tuple.partitions()) partitions.append(p.parts());
    d["partitions"] = partitions;
    d["classification"] = criteria::to_string(row.su.classification);
    d["sum_q"] = row.su.theorem1.sum_q;
    d["bound"] = row.su.theorem1.bound;
    d["exception"] = row.su.theorem1.exception;
    d["open_general"] = row.open_general;
    d["l2"] = row.l2;
    d["agree"] = row.agree;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact openness / L2 classification of sums of adjoint orbits in su(m) and products of "
      "conjugacy classes in SU(m), with a randomized numeric oracle";

  m.def("phi_size",
        [](const std::vector<int>& parts) {
          return rootsys::phi_size(rootsys::MultiplicityPartition(parts));
        },
        py::arg("parts"), "Number of annihilating roots, counted with both signs");
  m.def("n_psi_size",
        [](const std::vector<int>& blocks) {
          return rootsys::n_psi_size(rootsys::SubsystemShape(blocks));
        },
        py::arg("blocks"), "Number of roots crossing two blocks of the shape");
  m.def("corank",
        [](const std::vector<int>& blocks) {
          return rootsys::SubsystemShape(blocks).corank();
        },
        py::arg("blocks"));
  m.def("partitions",
        [](int m) { return rootsys::integer_partitions(m); }, py::arg("m"),
        "All partitions of m, descending lexicographic");
  m.def("proper_shapes",
        [](int m) {
          std::vector<std::vector<int>> out;
          for (const auto& s : rootsys::enumerate_proper_shapes(m)) out.push_back(s.blocks());
          return out;
        },
        py::arg("m"));
  m.def("corank_one_shapes",
        [](int m) {
          std::vector<std::vector<int>> out;
          for (const auto& s : rootsys::enumerate_corank_one_shapes(m)) out.push_back(s.blocks());
          return out;
        },
        py::arg("m"));

  m.def("max_crossing",
        [](const std::vector<int>& parts, const std::vector<int>& blocks) {
          const auto av = criteria::max_crossing(rootsys::MultiplicityPartition(parts),
                                                 rootsys::SubsystemShape(blocks));
          py::dict d;
          d["value"] = av.value;
          d["witness_matrix"] = av.witness_matrix;
          return d;
        },
        py::arg("parts"), py::arg("blocks"),
        "Worst-arrangement crossing count with an optimal overlap matrix");
  m.def("min_crossing",
        [](const std::vector<int>& parts, const std::vector<int>& blocks) {
          return criteria::min_crossing(rootsys::MultiplicityPartition(parts),
                                        rootsys::SubsystemShape(blocks));
        },
        py::arg("parts"), py::arg("blocks"));
  m.def("brute_force_max_crossing",
        [](const std::vector<int>& parts, const std::vector<int>& blocks) {
          return criteria::brute_force_max_crossing(rootsys::MultiplicityPartition(parts),
                                                    rootsys::SubsystemShape(blocks));
        },
        py::arg("parts"), py::arg("blocks"), "Factorial-cost oracle, m <= 8");
  m.def("brute_force_min_crossing",
        [](const std::vector<int>& parts, const std::vector<int>& blocks) {
          return criteria::brute_force_min_crossing(rootsys::MultiplicityPartition(parts),
                                                    rootsys::SubsystemShape(blocks));
        },
        py::arg("parts"), py::arg("blocks"));
  m.def("crossing_bound",
        [](const std::vector<int>& parts, const std::vector<int>& blocks) {
          const auto bound = criteria::crossing_bound(rootsys::MultiplicityPartition(parts),
                                                      rootsys::SubsystemShape(blocks));
          py::dict d;
          d["numerator"] = bound.numerator;
          d["denominator"] = bound.denominator;
          d["equality_possible"] = bound.equality_possible;
          return d;
        },
        py::arg("parts"), py::arg("blocks"));

  m.def("su_classify",
        [](const std::vector<std::vector<int>>& partitions, const std::string& kind) {
          return json_to_py(io::to_json(criteria::su_classify(make_orbit_tuple(partitions, kind))));
        },
        py::arg("partitions"), py::arg("case") = "algebra");
  m.def("classify",
        [](const std::vector<std::vector<int>>& partitions, const std::string& kind) {
          return json_to_py(
              io::to_json(criteria::dichotomy_classify(make_orbit_tuple(partitions, kind))));
        },
        py::arg("partitions"), py::arg("case") = "algebra",
        "Full dichotomy verdict with margin table and witness");
  m.def("open_check",
        [](const std::vector<std::vector<int>>& partitions) {
          const auto report = criteria::open_check_general(make_orbit_tuple(partitions, "algebra"));
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& row : report.margins) rows.push_back(io::to_json(row));
          return json_to_py(nlohmann::json{{"ok", report.ok}, {"margins", rows}});
        },
        py::arg("partitions"));
  m.def("l2_check",
        [](const std::vector<std::vector<int>>& partitions) {
          const auto report = criteria::l2_check(make_orbit_tuple(partitions, "algebra"));
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& row : report.margins) rows.push_back(io::to_json(row));
          return json_to_py(nlohmann::json{{"ok", report.ok}, {"margins", rows}});
        },
        py::arg("partitions"));
  m.def("rank_lower_bound",
        [](const std::vector<std::vector<int>>& partitions, const std::vector<int>& blocks) {
          return criteria::rank_lower_bound(make_orbit_tuple(partitions, "algebra"),
                                            rootsys::SubsystemShape(blocks));
        },
        py::arg("partitions"), py::arg("blocks"));

  m.def("singular_witness",
        [](const std::vector<std::vector<int>>& partitions, const std::string& kind) -> py::object {
          const auto w = criteria::singular_witness(make_orbit_tuple(partitions, kind));
          if (!w) return py::none();
          return json_to_py(io::to_json(*w));
        },
        py::arg("partitions"), py::arg("case") = "algebra");
  m.def("verify_witness",
        [](const py::object& witness) {
          return criteria::verify_witness(io::parse_witness(py_to_json(witness)));
        },
        py::arg("witness"));

  m.def("numeric_classify",
        [](const std::vector<std::vector<int>>& partitions, const std::string& kind, int samples,
           double tol, std::uint64_t seed, int threads) {
          return json_to_py(io::to_json(oracle::numeric_classify(
              make_orbit_tuple(partitions, kind), samples, tol, seed, threads)));
        },
        py::arg("partitions"), py::arg("case") = "algebra", py::arg("samples") = 32,
        py::arg("tol") = 1e-8, py::arg("seed") = 0, py::arg("threads") = 1,
        "Randomized centralizer-intersection verification");
  m.def("haar_sample",
        [](int m, std::uint64_t seed) {
          oracle::Rng rng(seed);
          const auto u = oracle::haar_sample(m, rng).matrix();
          std::vector<std::vector<std::complex<double>>> out(m);
          for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) out[r].push_back(u(r, c));
          }
          return out;
        },
        py::arg("m"), py::arg("seed"));
  m.def("centralizer_dim",
        [](const std::vector<int>& parts, const std::string& kind) {
          const rootsys::MultiplicityPartition p(parts);
          if (kind == "group") {
            return oracle::centralizer_basis(oracle::group_representative(p)).dim();
          }
          return oracle::centralizer_basis(oracle::algebra_representative(p)).dim();
        },
        py::arg("parts"), py::arg("case") = "algebra");

  m.def("scan",
        [](int m_lo, int m_hi, int k_lo, int k_hi, const std::string& kind, int threads) {
          // rows are collected into one list; keep the CLI guards
          if (m_hi > cli::kMaxCombinatorialM || k_hi > cli::kMaxScanK) {
            throw std::invalid_argument("scan limited to m <= 12, k <= 5");
          }
          return scan_rows_to_py(cli::run_sweep(m_lo, m_hi, k_lo, k_hi,
                                                rootsys::case_kind_from_string(kind), threads));
        },
        py::arg("m_lo"), py::arg("m_hi"), py::arg("k_lo"), py::arg("k_hi"),
        py::arg("case") = "algebra", py::arg("threads") = 0);
}
