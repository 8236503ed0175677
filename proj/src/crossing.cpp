#include "orbitsum/crossing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace orbitsum::criteria {

namespace {

// Even split of t over d cells: the fractional-relaxation minimum of
// sum a(a-1), rounded to integers. Valid lower bound per row.
int even_split_cost(int t, int d) {
  const int q = t / d;
  const int r = t % d;
  return r * (q + 1) * q + (d - r) * q * (q - 1);
}

// Concentrate t into the largest cells allowed by the capacities: upper
// bound for sum a(a-1) within one row.
int concentrate_cost(int t, std::vector<int> caps) {
  std::sort(caps.begin(), caps.end(), std::greater<int>());
  int total = 0;
  for (int c : caps) {
    if (t <= 0) break;
    const int take = std::min(t, c);
    total += take * (take - 1);
    t -= take;
  }
  return total;
}

int cost_of(const std::vector<int>& row) {
  int total = 0;
  for (int a : row) total += a * (a - 1);
  return total;
}

// All ways of distributing t over the given remaining capacities, deduped by
// symmetry: cells with equal remaining capacity are interchangeable, so only
// nonincreasing assignments across equal-capacity runs are produced.
std::vector<std::vector<int>> row_distributions(const std::vector<int>& cap, int t) {
  const int n = static_cast<int>(cap.size());
  std::vector<int> suffix(n + 1, 0);
  for (int j = n - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + cap[j];

  std::vector<std::vector<int>> out;
  std::vector<int> current(n, 0);
  std::function<void(int, int)> rec = [&](int j, int remaining) {
    if (j == n) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    int hi = std::min(cap[j], remaining);
    if (j > 0 && cap[j] == cap[j - 1]) hi = std::min(hi, current[j - 1]);
    const int lo = std::max(0, remaining - suffix[j + 1]);
    for (int a = hi; a >= lo; --a) {
      current[j] = a;
      rec(j + 1, remaining - a);
    }
    current[j] = 0;
  };
  rec(0, t);
  return out;
}

// Exact optimization of sum a[s][j](a[s][j]-1) over the transportation
// polytope: depth-first over rows (shape blocks) with memoization on the
// vector of remaining column capacities.
class PolytopeOptimizer {
 public:
  PolytopeOptimizer(std::vector<int> rows, std::vector<int> cols, bool maximize)
      : rows_(std::move(rows)), cols_(std::move(cols)), maximize_(maximize) {
    const int n = static_cast<int>(cols_.size());
    future_bound_.assign(rows_.size() + 1, 0);
    for (int r = static_cast<int>(rows_.size()) - 1; r >= 0; --r) {
      const int row_bound = maximize_ ? concentrate_cost(rows_[r], cols_)
                                      : even_split_cost(rows_[r], n);
      future_bound_[r] = future_bound_[r + 1] + row_bound;
    }
  }

  int solve() {
    std::vector<int> cap = cols_;
    return best(0, cap);
  }

  std::vector<std::vector<int>> witness() {
    std::vector<int> cap = cols_;
    int target = best(0, cap);
    std::vector<std::vector<int>> matrix;
    matrix.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      bool found = false;
      for (const auto& dist : row_distributions(cap, rows_[r])) {
        std::vector<int> next = cap;
        for (std::size_t j = 0; j < next.size(); ++j) next[j] -= dist[j];
        if (cost_of(dist) + best(static_cast<int>(r) + 1, next) == target) {
          target -= cost_of(dist);
          matrix.push_back(dist);
          cap = std::move(next);
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("transportation witness replay failed");
    }
    return matrix;
  }

 private:
  int best(int row, std::vector<int>& cap) {
    if (row == static_cast<int>(rows_.size())) return 0;
    std::string key;
    key.reserve(cap.size() + 1);
    key.push_back(static_cast<char>(row));
    for (int c : cap) key.push_back(static_cast<char>(c));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool have = false;
    int incumbent = 0;
    for (const auto& dist : row_distributions(cap, rows_[row])) {
      const int cost = cost_of(dist);
      if (have) {
        // admissible bound for everything below this row
        const int optimistic = cost + future_bound_[row + 1];
        if (maximize_ ? optimistic <= incumbent : optimistic >= incumbent) continue;
      }
      std::vector<int> next = cap;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] -= dist[j];
      const int value = cost + best(row + 1, next);
      if (!have || (maximize_ ? value > incumbent : value < incumbent)) {
        incumbent = value;
        have = true;
      }
    }
    if (!have) throw std::logic_error("transportation polytope is never empty");
    memo_.emplace(std::move(key), incumbent);
    return incumbent;
  }

  std::vector<int> rows_;
  std::vector<int> cols_;
  bool maximize_;
  std::vector<int> future_bound_;
  std::unordered_map<std::string, int> memo_;
};

struct PairResult {
  int max_value = 0;
  int min_value = 0;
  std::vector<std::vector<int>> witness;
};

void check_same_m(const MultiplicityPartition& p, const SubsystemShape& s) {
  if (p.m() != s.m()) {
    throw std::invalid_argument("partition and shape must have the same m");
  }
}

// Shared memo over (partition, shape) pairs; the scan and sweep paths hit
// the same few hundred pairs many thousands of times.
PairResult crossing_numbers(const MultiplicityPartition& p, const SubsystemShape& s) {
  check_same_m(p, s);
  if (p.m() > 120) {
    throw std::invalid_argument("crossing numbers limited to m <= 120");
  }
  std::string key;
  for (int w : p.parts()) key.push_back(static_cast<char>(w));
  key.push_back('|');
  for (int t : s.blocks()) key.push_back(static_cast<char>(t));

  static std::mutex mutex;
  static std::unordered_map<std::string, PairResult> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int phi = rootsys::phi_size(p);
  PolytopeOptimizer minimizer(s.blocks(), p.parts(), /*maximize=*/false);
  PolytopeOptimizer maximizer(s.blocks(), p.parts(), /*maximize=*/true);
  PairResult result;
  result.max_value = phi - minimizer.solve();
  result.min_value = phi - maximizer.solve();
  result.witness = minimizer.witness();
  cache.emplace(std::move(key), result);
  return result;
}

}  // namespace

ArrangementValue max_crossing(const MultiplicityPartition& p, const SubsystemShape& s) {
  PairResult pair = crossing_numbers(p, s);
  return ArrangementValue{s, p, pair.max_value, std::move(pair.witness)};
}

int min_crossing(const MultiplicityPartition& p, const SubsystemShape& s) {
  return crossing_numbers(p, s).min_value;
}

namespace {

std::pair<int, int> brute_force_extremes(const MultiplicityPartition& p, const SubsystemShape& s) {
  check_same_m(p, s);
  const int m = p.m();
  if (m > 8) throw std::invalid_argument("brute force crossing limited to m <= 8");

  // class id per coordinate, ascending so next_permutation covers every
  // distinct labeling exactly once
  std::vector<int> label;
  for (int j = 0; j < p.count(); ++j) {
    label.insert(label.end(), p.parts()[j], j);
  }
  std::sort(label.begin(), label.end());

  std::vector<int> block(m);
  {
    int pos = 0;
    for (int b = 0; b < s.block_count(); ++b) {
      for (int i = 0; i < s.blocks()[b]; ++i) block[pos++] = b;
    }
  }

  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  do {
    int crossing = 0;
    for (int u = 0; u < m; ++u) {
      for (int v = u + 1; v < m; ++v) {
        if (label[u] == label[v] && block[u] != block[v]) crossing += 2;
      }
    }
    lo = std::min(lo, crossing);
    hi = std::max(hi, crossing);
  } while (std::next_permutation(label.begin(), label.end()));
  return {lo, hi};
}

}  // namespace

int brute_force_max_crossing(const MultiplicityPartition& p, const SubsystemShape& s) {
  return brute_force_extremes(p, s).second;
}

int brute_force_min_crossing(const MultiplicityPartition& p, const SubsystemShape& s) {
  return brute_force_extremes(p, s).first;
}

CrossingBound crossing_bound(const MultiplicityPartition& p, const SubsystemShape& s) {
  check_same_m(p, s);
  if (s.block_count() != 2) {
    throw std::invalid_argument("crossing_bound requires a corank-one (two block) shape");
  }
  const std::int64_t m = s.m();
  const std::int64_t c = s.blocks()[1];
  const std::int64_t w = p.largest();

  CrossingBound bound;
  bound.numerator = w * 2 * c * (m - c);
  bound.denominator = m;
  const auto g = std::gcd(bound.numerator, bound.denominator);
  if (g > 1) {
    bound.numerator /= g;
    bound.denominator /= g;
  }
  bound.equality_possible = p.parts_all_equal() && (c * w) % m == 0;
  return bound;
}

}  // namespace orbitsum::criteria
