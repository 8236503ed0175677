#pragma once

#include <functional>
#include <vector>

#include "orbitsum/classify.hpp"
#include "orbitsum/rootsys.hpp"

namespace orbitsum::cli {

/// One scanned tuple with every decision procedure applied to it. `agree`
/// asserts the cross-criterion invariants: the general openness scan and the
/// L2 scan must both coincide with the exact classification.
struct ScanRow {
  rootsys::OrbitTuple tuple;
  criteria::Verdict su;
  bool open_general = false;
  bool l2 = false;
  bool agree = false;
};

/// Visits every multiset of k partitions of m, for m and k over the
/// inclusive ranges, in deterministic sorted order (descending lexicographic
/// partition order, combinations with repetition). Rows are evaluated in
/// chunks on a work pool against a per-m table of crossing numbers and
/// emitted strictly in order, so memory stays bounded for the largest
/// allowed ranges and the output does not depend on the thread count.
void stream_sweep(int m_lo, int m_hi, int k_lo, int k_hi, rootsys::CaseKind kind, int threads,
                  const std::function<void(const ScanRow&)>& emit);

/// stream_sweep collected into a vector; intended for moderate ranges.
std::vector<ScanRow> run_sweep(int m_lo, int m_hi, int k_lo, int k_hi, rootsys::CaseKind kind,
                               int threads = 0);

}  // namespace orbitsum::cli
