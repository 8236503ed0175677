#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbitsum/rootsys.hpp"

namespace orbitsum::criteria {

using rootsys::OrbitTuple;

enum class WitnessFamily { linear, parity };

/// An explicit singularity certificate: a corank-one subsystem Psi realized
/// as a set partition of {1..m}, plus one explicit labeling of {1..m} per
/// orbit. The certificate is valid when the k sets N_i ∩ N_Psi (roots
/// crossing both the labeling classes and the Psi blocks) are pairwise
/// disjoint.
struct SingularWitness {
  OrbitTuple tuple;
  rootsys::SubsystemShape shape;
  /// Blocks of Psi as 1-based index sets covering {1..m}.
  std::vector<std::vector<int>> shape_blocks;
  /// arrangements[i] lists the classes of orbit i as 1-based index sets;
  /// class sizes realize tuple.partitions()[i].
  std::vector<std::vector<std::vector<int>>> arrangements;
  WitnessFamily family = WitnessFamily::linear;

  friend bool operator==(const SingularWitness&, const SingularWitness&) = default;
};

/// Constructs a certificate when one of the two explicit families applies:
/// the coordinate-cut family when sum q_i >= (k-1)m + 1, or the parity
/// family for the exceptional pair ((m/2,m/2),(m/2,m/2)). Returns nullopt
/// otherwise (in particular for every open tuple).
std::optional<SingularWitness> singular_witness(const OrbitTuple& t);

/// Checks pairwise disjointness of the k sets N_i ∩ N_Psi computed from the
/// explicit data. True certifies the tuple singular. Throws
/// std::invalid_argument when the witness is malformed (class sizes not
/// matching the tuple, blocks not covering {1..m}, ...).
bool verify_witness(const SingularWitness& w);

/// N_i ∩ N_Psi for one orbit, as unordered coordinate pairs (p < q, 1-based).
/// Each pair stands for the root pair ±(e_p - e_q).
std::vector<std::pair<int, int>> witness_crossing_pairs(const SingularWitness& w, int orbit_index);

/// Test oracle: exhausts all labelings of every orbit against every
/// corank-one shape and returns a verified certificate iff one exists.
/// Factorial cost; rejects m > 5.
std::optional<SingularWitness> exhaustive_singular_search(const OrbitTuple& t);

}  // namespace orbitsum::criteria
