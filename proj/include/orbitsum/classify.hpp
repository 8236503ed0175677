#pragma once

#include <optional>
#include <vector>

#include "orbitsum/crossing.hpp"
#include "orbitsum/rootsys.hpp"
#include "orbitsum/witness.hpp"

namespace orbitsum::criteria {

using rootsys::OrbitTuple;

enum class Classification { Open, Singular };
enum class MeasureClass { InL2, SingularToHaar };

/// The exact su(m) inequality: sum of highest multiplicities against (k-1)m,
/// plus the exceptional-pair flag.
struct InequalityEvidence {
  int sum_q = 0;
  int bound = 0;  // (k-1) * m
  bool exception = false;

  friend bool operator==(const InequalityEvidence&, const InequalityEvidence&) = default;
};

/// One row of a margin table for a shape Psi. lhs is the worst-arrangement
/// sum over orbits of max |Phi_i ∩ sigma N_Psi|; rhs is the criterion
/// threshold for this table ((k-1)|N_Psi| - 1 for the openness scan,
/// (k-1)|N_Psi| - corank for the L2 scan). lhs_min records the
/// best-arrangement reading, sum of min |Phi_i ∩ sigma N_Psi|, for the same
/// rhs.
struct MarginRow {
  rootsys::SubsystemShape shape;
  int lhs = 0;
  int rhs = 0;
  int corank = 0;
  int lhs_min = 0;

  bool holds() const { return lhs <= rhs; }
  friend bool operator==(const MarginRow&, const MarginRow&) = default;
};

struct CheckReport {
  bool ok = false;
  std::vector<MarginRow> margins;
};

struct Verdict {
  Classification classification = Classification::Singular;
  MeasureClass measure_class = MeasureClass::SingularToHaar;
  InequalityEvidence theorem1;
  std::vector<MarginRow> margins;
  std::optional<SingularWitness> witness;

  bool is_open() const { return classification == Classification::Open; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// True when the tuple reduces to the exceptional pair: after discarding
/// central partitions (a single eigenvalue class, orbit = {0}, which adds
/// nothing to the sum), exactly two partitions remain and both are
/// (m/2, m/2) with m/2 >= 2.
bool exceptional_tuple(const OrbitTuple& t);

/// The exact su(m) classification: Open iff sum q_i <= (k-1)m and the tuple
/// does not reduce to the exceptional pair ((m/2,m/2),(m/2,m/2)) with
/// m/2 >= 2. Fills only the inequality evidence.
Verdict su_classify(const OrbitTuple& t);

/// The general openness criterion on type A: for every corank-one shape,
/// sum_i max_crossing(p_i, s) <= (k-1)|N_Psi| - 1. Equivalent to
/// su_classify on type A; both are exercised against each other in tests.
CheckReport open_check_general(const OrbitTuple& t);

/// The L2 criterion, enforced for the worst arrangement: for every proper
/// shape, sum_i max_crossing(p_i, s) <= (k-1)|N_Psi| - corank(Psi).
CheckReport l2_check(const OrbitTuple& t);

/// Lower bound for the rank of the orbit-sum differential along a
/// maximally singular direction of shape s:
/// sum_i (|N_Psi| - max_crossing(p_i, s)). Diagnostic; compare with the
/// orbit dimension n_psi_size(s). Requires a corank-one shape.
int rank_lower_bound(const OrbitTuple& t, const rootsys::SubsystemShape& s);

/// Full verdict: classification and measure class from su_classify (the
/// dichotomy leaves no middle ground), an L2 margin table when open, and a
/// verified singularity certificate when singular.
Verdict dichotomy_classify(const OrbitTuple& t);

std::string to_string(Classification c);
std::string to_string(MeasureClass mc);

}  // namespace orbitsum::criteria
