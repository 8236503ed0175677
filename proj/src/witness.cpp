#include "orbitsum/witness.hpp"

#include <algorithm>

#include "orbitsum/classify.hpp"
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace orbitsum::criteria {

namespace {

using PairSet = std::set<std::pair<int, int>>;

std::vector<int> sorted_sizes(const std::vector<std::vector<int>>& classes) {
  std::vector<int> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

// class id per coordinate (1-based input, 0-based output vector of length m);
// throws unless the index sets partition {1..m}
std::vector<int> class_of_coordinate(const std::vector<std::vector<int>>& classes, int m,
                                     const char* what) {
  std::vector<int> owner(m, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument(std::string(what) + ": empty class");
    for (int idx : classes[c]) {
      if (idx < 1 || idx > m) throw std::invalid_argument(std::string(what) + ": index out of range");
      if (owner[idx - 1] != -1) throw std::invalid_argument(std::string(what) + ": index repeated");
      owner[idx - 1] = static_cast<int>(c);
    }
  }
  for (int o : owner) {
    if (o == -1) throw std::invalid_argument(std::string(what) + ": indices do not cover {1..m}");
  }
  return owner;
}

void validate_witness(const SingularWitness& w) {
  const int m = w.tuple.m();
  const int k = w.tuple.k();
  if (static_cast<int>(w.arrangements.size()) != k) {
    throw std::invalid_argument("witness: need one arrangement per orbit");
  }
  if (sorted_sizes(w.shape_blocks) != w.shape.blocks()) {
    throw std::invalid_argument("witness: shape blocks do not realize the shape");
  }
  if (w.shape.m() != m) {
    throw std::invalid_argument("witness: shape dimension mismatch");
  }
  class_of_coordinate(w.shape_blocks, m, "witness shape");
  for (int i = 0; i < k; ++i) {
    if (sorted_sizes(w.arrangements[i]) != w.tuple.partitions()[i].parts()) {
      throw std::invalid_argument("witness: arrangement class sizes do not match the partition");
    }
    class_of_coordinate(w.arrangements[i], m, "witness arrangement");
  }
}

PairSet crossing_pairs(const std::vector<int>& arrangement_class, const std::vector<int>& psi_block,
                       int m) {
  PairSet pairs;
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < m; ++q) {
      if (arrangement_class[p] != arrangement_class[q] && psi_block[p] != psi_block[q]) {
        pairs.emplace(p + 1, q + 1);
      }
    }
  }
  return pairs;
}

}  // namespace

std::vector<std::pair<int, int>> witness_crossing_pairs(const SingularWitness& w, int orbit_index) {
  validate_witness(w);
  if (orbit_index < 0 || orbit_index >= w.tuple.k()) {
    throw std::invalid_argument("witness: orbit index out of range");
  }
  const int m = w.tuple.m();
  const auto psi = class_of_coordinate(w.shape_blocks, m, "witness shape");
  const auto arr = class_of_coordinate(w.arrangements[orbit_index], m, "witness arrangement");
  const PairSet pairs = crossing_pairs(arr, psi, m);
  return {pairs.begin(), pairs.end()};
}

bool verify_witness(const SingularWitness& w) {
  validate_witness(w);
  const int m = w.tuple.m();
  const auto psi = class_of_coordinate(w.shape_blocks, m, "witness shape");

  PairSet seen;
  for (int i = 0; i < w.tuple.k(); ++i) {
    const auto arr = class_of_coordinate(w.arrangements[i], m, "witness arrangement");
    for (const auto& pq : crossing_pairs(arr, psi, m)) {
      if (!seen.insert(pq).second) return false;  // pair hit twice: not disjoint
    }
  }
  return true;
}

namespace {

// Family 1: Psi cuts off coordinate 1. Orbit i keeps its largest class on a
// set S_i containing 1; the complements are consumed from the top index down,
// so orbit 1 occupies {1..q_1}. N_i ∩ N_Psi = {(1,p) : p outside S_i} and the
// complements are disjoint by construction.
SingularWitness linear_witness(const OrbitTuple& t) {
  const int m = t.m();
  SingularWitness w{t,
                    rootsys::SubsystemShape(m >= 2 ? std::vector<int>{m - 1, 1}
                                                   : std::vector<int>{1}),
                    {},
                    {},
                    WitnessFamily::linear};
  if (m >= 2) {
    std::vector<int> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 2);
    w.shape_blocks = {rest, {1}};
  } else {
    w.shape_blocks = {{1}};
  }

  int next_top = m;  // complements packed downward from coordinate m
  for (const auto& p : t.partitions()) {
    const int q = p.largest();
    std::vector<bool> excluded(m + 1, false);
    for (int j = 0; j < m - q; ++j) excluded[next_top - j] = true;
    next_top -= m - q;

    std::vector<std::vector<int>> classes;
    std::vector<int> big;
    for (int idx = 1; idx <= m; ++idx) {
      if (!excluded[idx]) big.push_back(idx);
    }
    classes.push_back(big);
    // remaining classes fill the excluded coordinates in ascending order
    int cursor = 1;
    for (int j = 1; j < p.count(); ++j) {
      std::vector<int> cls;
      while (static_cast<int>(cls.size()) < p.parts()[j]) {
        while (!excluded[cursor]) ++cursor;
        cls.push_back(cursor);
        ++cursor;
      }
      classes.push_back(cls);
    }
    w.arrangements.push_back(std::move(classes));
  }
  return w;
}

// Family 2: the parity construction for tuples reducing to the exceptional
// pair in even m. With halves F = {1..h} and S = {h+1..m}, h = m/2, split
// each half by parity; Psi groups (F_odd ∪ S_odd | F_even ∪ S_even), one
// essential orbit splits into the halves, the other into
// (F_odd ∪ S_even | F_even ∪ S_odd). The two crossing sets live on opposite
// sides of the half split; central orbits have empty crossing sets.
SingularWitness parity_witness(const OrbitTuple& t) {
  const int m = t.m();
  const int h = m / 2;
  std::vector<int> f_odd, f_even, s_odd, s_even;
  for (int p = 1; p <= h; ++p) {
    (p % 2 == 1 ? f_odd : f_even).push_back(p);
    (p % 2 == 1 ? s_odd : s_even).push_back(p + h);
  }
  auto join = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };

  const std::vector<int> psi_a = join(f_odd, s_odd);
  const std::vector<int> psi_b = join(f_even, s_even);
  std::vector<int> first_half(h), second_half(h), everything(m);
  std::iota(first_half.begin(), first_half.end(), 1);
  std::iota(second_half.begin(), second_half.end(), h + 1);
  std::iota(everything.begin(), everything.end(), 1);

  SingularWitness w{t,
                    rootsys::SubsystemShape({static_cast<int>(psi_a.size()),
                                             static_cast<int>(psi_b.size())}),
                    {psi_a, psi_b},
                    {},
                    WitnessFamily::parity};
  bool first_essential = true;
  for (const auto& p : t.partitions()) {
    if (p.count() == 1) {
      w.arrangements.push_back({everything});
    } else if (first_essential) {
      w.arrangements.push_back({first_half, second_half});
      first_essential = false;
    } else {
      w.arrangements.push_back({join(f_odd, s_even), join(f_even, s_odd)});
    }
  }
  return w;
}

}  // namespace

std::optional<SingularWitness> singular_witness(const OrbitTuple& t) {
  const int m = t.m();
  const int k = t.k();
  if (t.sum_largest() >= (k - 1) * m + 1) {
    return linear_witness(t);
  }
  if (exceptional_tuple(t)) {
    return parity_witness(t);
  }
  return std::nullopt;
}

namespace {

// all distinct labelings of {0..m-1} by classes with the given sizes
std::vector<std::vector<int>> all_labelings(const std::vector<int>& sizes) {
  std::vector<int> label;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    label.insert(label.end(), sizes[j], static_cast<int>(j));
  }
  std::sort(label.begin(), label.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(label);
  } while (std::next_permutation(label.begin(), label.end()));
  return out;
}

std::vector<std::vector<int>> classes_from_labeling(const std::vector<int>& label, int class_count) {
  std::vector<std::vector<int>> classes(class_count);
  for (int idx = 0; idx < static_cast<int>(label.size()); ++idx) {
    classes[label[idx]].push_back(idx + 1);
  }
  return classes;
}

}  // namespace

std::optional<SingularWitness> exhaustive_singular_search(const OrbitTuple& t) {
  const int m = t.m();
  if (m > 5) throw std::invalid_argument("exhaustive singular search limited to m <= 5");
  if (m < 2) return std::nullopt;
  const int k = t.k();

  for (const auto& shape : rootsys::enumerate_corank_one_shapes(m)) {
    // fixed block split: first block = leading coordinates
    std::vector<int> psi_block(m);
    for (int i = 0; i < m; ++i) psi_block[i] = i < shape.blocks()[0] ? 0 : 1;

    // crossing pairs indexed for bitmasks
    std::vector<std::pair<int, int>> cross;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (psi_block[p] != psi_block[q]) cross.emplace_back(p, q);
      }
    }

    // per orbit: distinct achievable masks of N_i ∩ N_Psi with a sample labeling
    std::vector<std::map<std::uint64_t, std::vector<int>>> masks(k);
    for (int i = 0; i < k; ++i) {
      for (const auto& label : all_labelings(t.partitions()[i].parts())) {
        std::uint64_t mask = 0;
        for (std::size_t e = 0; e < cross.size(); ++e) {
          if (label[cross[e].first] != label[cross[e].second]) mask |= std::uint64_t{1} << e;
        }
        masks[i].emplace(mask, label);
      }
    }

    std::vector<const std::vector<int>*> chosen(k, nullptr);
    std::function<bool(int, std::uint64_t)> pick = [&](int orbit, std::uint64_t used) -> bool {
      if (orbit == k) return true;
      for (const auto& [mask, label] : masks[orbit]) {
        if ((mask & used) != 0) continue;
        chosen[orbit] = &label;
        if (pick(orbit + 1, used | mask)) return true;
      }
      return false;
    };

    if (pick(0, 0)) {
      SingularWitness w{t, shape, {}, {}, WitnessFamily::linear};
      std::vector<int> block_a, block_b;
      for (int i = 0; i < m; ++i) (psi_block[i] == 0 ? block_a : block_b).push_back(i + 1);
      w.shape_blocks = {block_a, block_b};
      for (int i = 0; i < k; ++i) {
        w.arrangements.push_back(classes_from_labeling(*chosen[i], t.partitions()[i].count()));
      }
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace orbitsum::criteria
