#include "orbitsum/sweep.hpp"

#include <stdexcept>

#include "orbitsum/crossing.hpp"
#include "orbitsum/parallel.hpp"

namespace orbitsum::cli {

namespace {

constexpr std::size_t kChunkRows = 32768;

// crossing numbers of every (partition, shape) pair of one m, as flat
// arrays so the scan loop stays lock free
struct CrossingTable {
  std::vector<rootsys::MultiplicityPartition> partitions;
  std::vector<rootsys::SubsystemShape> shapes;
  std::vector<int> n_psi;      // per shape
  std::vector<int> corank;     // per shape
  std::vector<int> max_value;  // partition-major: [p * shapes + s]
  std::vector<int> min_value;

  explicit CrossingTable(int m)
      : partitions(rootsys::enumerate_partitions(m)),
        shapes(rootsys::enumerate_proper_shapes(m)) {
    n_psi.reserve(shapes.size());
    corank.reserve(shapes.size());
    for (const auto& s : shapes) {
      n_psi.push_back(rootsys::n_psi_size(s));
      corank.push_back(s.corank());
    }
    max_value.resize(partitions.size() * shapes.size());
    min_value.resize(partitions.size() * shapes.size());
    for (std::size_t p = 0; p < partitions.size(); ++p) {
      for (std::size_t s = 0; s < shapes.size(); ++s) {
        max_value[p * shapes.size() + s] = criteria::max_crossing(partitions[p], shapes[s]).value;
        min_value[p * shapes.size() + s] = criteria::min_crossing(partitions[p], shapes[s]);
      }
    }
  }

  void fill_flags(ScanRow& row, const std::vector<int>& pick) const {
    const int k = static_cast<int>(pick.size());
    bool open_general = true;
    bool l2 = true;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      int lhs = 0;
      for (int idx : pick) lhs += max_value[idx * shapes.size() + s];
      const int base = (k - 1) * n_psi[s];
      if (corank[s] == 1 && lhs > base - 1) open_general = false;
      if (lhs > base - corank[s]) l2 = false;
      if (!open_general && !l2) break;
    }
    row.open_general = open_general;
    row.l2 = l2;
    const bool open = row.su.is_open();
    row.agree = (open_general == open) && (l2 == open);
  }
};

}  // namespace

void stream_sweep(int m_lo, int m_hi, int k_lo, int k_hi, rootsys::CaseKind kind, int threads,
                  const std::function<void(const ScanRow&)>& emit) {
  if (m_lo < 2 || m_lo > m_hi || k_lo < 1 || k_lo > k_hi) {
    throw std::invalid_argument("sweep: empty or invalid range");
  }

  for (int m = m_lo; m <= m_hi; ++m) {
    const CrossingTable table(m);
    const int count = static_cast<int>(table.partitions.size());

    std::vector<ScanRow> chunk;
    std::vector<std::vector<int>> picks;
    chunk.reserve(kChunkRows);
    picks.reserve(kChunkRows);

    auto flush = [&] {
      util::parallel_for(chunk.size(), threads,
                         [&](std::size_t i) { table.fill_flags(chunk[i], picks[i]); });
      for (const auto& row : chunk) emit(row);
      chunk.clear();
      picks.clear();
    };

    for (int k = k_lo; k <= k_hi; ++k) {
      std::vector<int> pick(k, 0);
      while (true) {
        std::vector<rootsys::MultiplicityPartition> chosen;
        chosen.reserve(k);
        for (int idx : pick) chosen.push_back(table.partitions[idx]);
        rootsys::OrbitTuple tuple(std::move(chosen), kind);
        criteria::Verdict su = criteria::su_classify(tuple);
        chunk.push_back(ScanRow{std::move(tuple), std::move(su), false, false, false});
        picks.push_back(pick);
        if (chunk.size() == kChunkRows) flush();

        int slot = k - 1;
        while (slot >= 0 && pick[slot] == count - 1) --slot;
        if (slot < 0) break;
        const int next = pick[slot] + 1;
        for (int i = slot; i < k; ++i) pick[i] = next;
      }
    }
    flush();
  }
}

std::vector<ScanRow> run_sweep(int m_lo, int m_hi, int k_lo, int k_hi, rootsys::CaseKind kind,
                               int threads) {
  std::vector<ScanRow> rows;
  stream_sweep(m_lo, m_hi, k_lo, k_hi, kind, threads,
               [&rows](const ScanRow& row) { rows.push_back(row); });
  return rows;
}

}  // namespace orbitsum::cli
