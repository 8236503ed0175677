#include "orbitsum/classify.hpp"

#include <stdexcept>

namespace orbitsum::criteria {

bool exceptional_tuple(const OrbitTuple& t) {
  // central partitions contribute the single point {0}; only the rest shape
  // the sum
  std::vector<const rootsys::MultiplicityPartition*> essential;
  for (const auto& p : t.partitions()) {
    if (p.count() > 1) essential.push_back(&p);
  }
  if (essential.size() != 2) return false;
  const auto& a = *essential[0];
  const auto& b = *essential[1];
  return a == b && a.count() == 2 && a.parts()[0] == a.parts()[1] && a.parts()[0] >= 2;
}

namespace {

MarginRow margin_row(const OrbitTuple& t, const rootsys::SubsystemShape& s, int slack) {
  MarginRow row{s, 0, 0, s.corank(), 0};
  for (const auto& p : t.partitions()) {
    row.lhs += max_crossing(p, s).value;
    row.lhs_min += min_crossing(p, s);
  }
  row.rhs = (t.k() - 1) * rootsys::n_psi_size(s) - slack;
  return row;
}

CheckReport margin_scan(const OrbitTuple& t, const std::vector<rootsys::SubsystemShape>& shapes,
                        bool slack_is_corank) {
  CheckReport report;
  report.ok = true;
  report.margins.reserve(shapes.size());
  for (const auto& s : shapes) {
    MarginRow row = margin_row(t, s, slack_is_corank ? s.corank() : 1);
    report.ok = report.ok && row.holds();
    report.margins.push_back(std::move(row));
  }
  return report;
}

}  // namespace

Verdict su_classify(const OrbitTuple& t) {
  Verdict v;
  v.theorem1.sum_q = t.sum_largest();
  v.theorem1.bound = (t.k() - 1) * t.m();
  v.theorem1.exception = exceptional_tuple(t);
  const bool open = v.theorem1.sum_q <= v.theorem1.bound && !v.theorem1.exception;
  v.classification = open ? Classification::Open : Classification::Singular;
  v.measure_class = open ? MeasureClass::InL2 : MeasureClass::SingularToHaar;
  return v;
}

CheckReport open_check_general(const OrbitTuple& t) {
  return margin_scan(t, rootsys::enumerate_corank_one_shapes(t.m()), /*slack_is_corank=*/false);
}

CheckReport l2_check(const OrbitTuple& t) {
  return margin_scan(t, rootsys::enumerate_proper_shapes(t.m()), /*slack_is_corank=*/true);
}

int rank_lower_bound(const OrbitTuple& t, const rootsys::SubsystemShape& s) {
  if (s.corank() != 1) {
    throw std::invalid_argument("rank_lower_bound requires a corank-one shape");
  }
  if (s.m() != t.m()) {
    throw std::invalid_argument("rank_lower_bound: dimension mismatch");
  }
  const int n_psi = rootsys::n_psi_size(s);
  int total = 0;
  for (const auto& p : t.partitions()) {
    total += n_psi - max_crossing(p, s).value;
  }
  return total;
}

Verdict dichotomy_classify(const OrbitTuple& t) {
  Verdict v = su_classify(t);
  if (t.m() < 2) return v;  // su(1) is trivial; no proper shapes to scan
  if (v.is_open()) {
    v.margins = l2_check(t).margins;
  } else {
    // corank-one margin rows: the failing shape is visible here
    v.margins = margin_scan(t, rootsys::enumerate_corank_one_shapes(t.m()),
                            /*slack_is_corank=*/true)
                    .margins;
    if (auto w = singular_witness(t); w && verify_witness(*w)) {
      v.witness = std::move(w);
    }
  }
  return v;
}

std::string to_string(Classification c) {
  return c == Classification::Open ? "Open" : "Singular";
}

std::string to_string(MeasureClass mc) {
  return mc == MeasureClass::InL2 ? "InL2" : "SingularToHaar";
}

}  // namespace orbitsum::criteria
