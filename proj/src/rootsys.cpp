#include "orbitsum/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbitsum::rootsys {

namespace {

void validate_positive(const std::vector<int>& values, const char* what) {
  if (values.empty()) {
    throw std::invalid_argument(std::string(what) + ": must have at least one entry");
  }
  for (int v : values) {
    if (v < 1) {
      throw std::invalid_argument(std::string(what) + ": entries must be positive integers");
    }
  }
}

}  // namespace

MultiplicityPartition::MultiplicityPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate_positive(parts_, "MultiplicityPartition");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  m_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool MultiplicityPartition::parts_all_equal() const {
  return parts_.front() == parts_.back();
}

SubsystemShape::SubsystemShape(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  validate_positive(blocks_, "SubsystemShape");
  std::sort(blocks_.begin(), blocks_.end(), std::greater<int>());
  m_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

std::string to_string(CaseKind kind) {
  return kind == CaseKind::algebra ? "algebra" : "group";
}

CaseKind case_kind_from_string(const std::string& name) {
  if (name == "algebra") return CaseKind::algebra;
  if (name == "group") return CaseKind::group;
  throw std::invalid_argument("unknown case kind: " + name);
}

OrbitTuple::OrbitTuple(std::vector<MultiplicityPartition> partitions, CaseKind kind)
    : partitions_(std::move(partitions)), kind_(kind) {
  if (partitions_.empty()) {
    throw std::invalid_argument("OrbitTuple: need at least one partition");
  }
  const int m = partitions_.front().m();
  for (const auto& p : partitions_) {
    if (p.m() != m) {
      throw std::invalid_argument("OrbitTuple: all partitions must share the same m");
    }
  }
  std::sort(partitions_.begin(), partitions_.end(),
            [](const MultiplicityPartition& a, const MultiplicityPartition& b) {
              return a.parts() > b.parts();
            });
}

int OrbitTuple::sum_largest() const {
  int sum = 0;
  for (const auto& p : partitions_) sum += p.largest();
  return sum;
}

int phi_size(const MultiplicityPartition& p) {
  int total = 0;
  for (int w : p.parts()) total += w * (w - 1);
  return total;
}

int n_psi_size(const SubsystemShape& s) {
  int inside = 0;
  for (int t : s.blocks()) inside += t * (t - 1);
  return s.m() * (s.m() - 1) - inside;
}

int corank(const SubsystemShape& s) { return s.corank(); }

std::vector<std::vector<int>> integer_partitions(int m) {
  if (m < 1) throw std::invalid_argument("integer_partitions: m must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<MultiplicityPartition> enumerate_partitions(int m) {
  std::vector<MultiplicityPartition> out;
  for (auto& parts : integer_partitions(m)) {
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<SubsystemShape> enumerate_proper_shapes(int m) {
  if (m < 2) throw std::invalid_argument("enumerate_proper_shapes: m must be >= 2");
  std::vector<SubsystemShape> out;
  for (auto& parts : integer_partitions(m)) {
    if (parts.size() == 1) continue;  // (m) is Phi itself, not proper
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<SubsystemShape> enumerate_corank_one_shapes(int m) {
  if (m < 2) throw std::invalid_argument("enumerate_corank_one_shapes: m must be >= 2");
  std::vector<SubsystemShape> out;
  for (int c = 1; c <= m / 2; ++c) {
    out.push_back(SubsystemShape({m - c, c}));
  }
  return out;
}

}  // namespace orbitsum::rootsys
