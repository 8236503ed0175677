#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

/// Exact integer model of the root system A_{m-1} (the root system of su(m)),
/// its subsystems, and the counting functions the classification criteria
/// are built on.
///
/// Roots of A_{m-1} are the differences e_p - e_q, p != q, of coordinates of
/// {1,...,m}. Throughout the library roots are counted as ordered pairs, i.e.
/// both signs of each root count, so the full system has m(m-1) roots.
///
/// Subsystems are only ever needed up to the Weyl group (the symmetric group
/// S_m), so they are represented by number partitions of m:
///  - a MultiplicityPartition records the eigenvalue multiplicities of an
///    orbit representative X; its annihilating subsystem is the set of roots
///    e_p - e_q with p, q in the same eigenvalue class,
///  - a SubsystemShape records the block sizes of a closed subsystem Psi;
///    the complement N_Psi is the set of roots crossing two blocks.
namespace orbitsum::rootsys {

/// Eigenvalue multiplicities w_1 >= ... >= w_d of an orbit representative.
/// Parts are positive and stored in canonical nonincreasing order; the
/// constructor sorts its input.
class MultiplicityPartition {
 public:
  explicit MultiplicityPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int m() const { return m_; }
  /// Largest part, the highest eigenvalue multiplicity q.
  int largest() const { return parts_.front(); }
  /// Number of parts (distinct eigenvalues).
  int count() const { return static_cast<int>(parts_.size()); }
  /// True when every eigenvalue has the same multiplicity.
  bool parts_all_equal() const;

  friend bool operator==(const MultiplicityPartition&, const MultiplicityPartition&) = default;
  friend auto operator<=>(const MultiplicityPartition& a, const MultiplicityPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int m_ = 0;
};

/// Block sizes t_1 >= ... >= t_l of a closed root subsystem Psi of A_{m-1},
/// i.e. a number partition of m. blocks = (m) is the full system Phi and is
/// excluded from the "proper" enumeration below.
class SubsystemShape {
 public:
  explicit SubsystemShape(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  int m() const { return m_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// rank(Psi) = m - l.
  int rank() const { return m_ - block_count(); }
  /// corank(Psi) = rank(Phi) - rank(Psi) = l - 1.
  int corank() const { return block_count() - 1; }

  friend bool operator==(const SubsystemShape&, const SubsystemShape&) = default;
  friend auto operator<=>(const SubsystemShape& a, const SubsystemShape& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<int> blocks_;
  int m_ = 0;
};

enum class CaseKind { algebra, group };

std::string to_string(CaseKind kind);
CaseKind case_kind_from_string(const std::string& name);

/// A problem instance: k orbits (adjoint orbits of su(m) or conjugacy classes
/// of SU(m)), each given by its multiplicity partition. All criteria are
/// symmetric in the orbits, so the partitions are kept sorted descending.
class OrbitTuple {
 public:
  OrbitTuple(std::vector<MultiplicityPartition> partitions, CaseKind kind);

  const std::vector<MultiplicityPartition>& partitions() const { return partitions_; }
  CaseKind kind() const { return kind_; }
  int m() const { return partitions_.front().m(); }
  int k() const { return static_cast<int>(partitions_.size()); }
  /// Sum of the highest eigenvalue multiplicities, the left side of the
  /// su(m) openness inequality.
  int sum_largest() const;

  friend bool operator==(const OrbitTuple&, const OrbitTuple&) = default;

 private:
  std::vector<MultiplicityPartition> partitions_;
  CaseKind kind_;
};

/// Number of roots annihilating a representative with these multiplicities:
/// sum_j w_j (w_j - 1). Ordered-pair count (both signs).
int phi_size(const MultiplicityPartition& p);

/// |N_Psi| = m(m-1) - sum_s t_s (t_s - 1), the number of roots crossing two
/// blocks of the shape. Ordered-pair count (both signs).
int n_psi_size(const SubsystemShape& s);

/// corank(Psi) = l - 1 for a shape with l blocks.
int corank(const SubsystemShape& s);

/// All number partitions of m in descending lexicographic order, (m) first.
std::vector<std::vector<int>> integer_partitions(int m);

/// Every partition of m as a MultiplicityPartition, descending lex order.
std::vector<MultiplicityPartition> enumerate_partitions(int m);

/// All proper shapes: every partition of m except (m) itself. Includes the
/// all-singletons shape (the empty subsystem). Requires m >= 2.
std::vector<SubsystemShape> enumerate_proper_shapes(int m);

/// The corank-one shapes (c, m-c), c = 1..floor(m/2). Requires m >= 2.
std::vector<SubsystemShape> enumerate_corank_one_shapes(int m);

}  // namespace orbitsum::rootsys
