#pragma once

#include <cstdint>
#include <vector>

#include "orbitsum/rootsys.hpp"

namespace orbitsum::criteria {

using rootsys::MultiplicityPartition;
using rootsys::SubsystemShape;

/// Result of maximizing |Phi_X ∩ sigma N_Psi| over the Weyl group, together
/// with a contingency matrix witnessing the optimum.
///
/// A Weyl element only matters through the overlap matrix a[s][j] =
/// |block_s ∩ class_j|, a nonnegative integer matrix with row sums equal to
/// the shape blocks and column sums equal to the partition parts. For that
/// relative position the overlap count is
///   phi_size(p) - sum_{s,j} a[s][j] (a[s][j] - 1),
/// so the maximum is attained by minimizing the separable convex sum.
struct ArrangementValue {
  SubsystemShape shape;
  MultiplicityPartition partition;
  /// max over sigma of |Phi_X ∩ sigma N_Psi|, ordered-pair count.
  int value = 0;
  /// Optimal overlap matrix: rows follow shape.blocks(), columns follow
  /// partition.parts().
  std::vector<std::vector<int>> witness_matrix;
};

/// Exact maximum of |Phi_X ∩ sigma N_Psi| over all Weyl elements sigma.
/// Throws std::invalid_argument when p.m() != s.m().
ArrangementValue max_crossing(const MultiplicityPartition& p, const SubsystemShape& s);

/// Exact minimum of |Phi_X ∩ sigma N_Psi| over all Weyl elements sigma.
int min_crossing(const MultiplicityPartition& p, const SubsystemShape& s);

/// Independent factorial-cost oracle for max_crossing: exhausts all distinct
/// labelings of {1..m} by eigenvalue classes against a fixed block split.
/// Rejects m > 8.
int brute_force_max_crossing(const MultiplicityPartition& p, const SubsystemShape& s);

/// Brute-force counterpart of min_crossing. Rejects m > 8.
int brute_force_min_crossing(const MultiplicityPartition& p, const SubsystemShape& s);

/// The equivalence-class bound for a two-block shape (c, m-c): the crossing
/// count is at most (w_1/m) * 2c(m-c), with equality exactly when all parts
/// are equal and every class splits evenly across the two blocks.
struct CrossingBound {
  std::int64_t numerator = 0;    // w_1 * 2c(m-c)
  std::int64_t denominator = 1;  // m
  bool equality_possible = false;

  /// Exact rational comparison value <= numerator/denominator.
  bool admits(std::int64_t value) const { return value * denominator <= numerator; }
  bool attained_by(std::int64_t value) const { return value * denominator == numerator; }
};

/// Throws std::invalid_argument unless s has exactly two blocks and the
/// dimensions agree.
CrossingBound crossing_bound(const MultiplicityPartition& p, const SubsystemShape& s);

}  // namespace orbitsum::criteria
