#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbitsum/algebra.hpp"
#include "orbitsum/rootsys.hpp"

namespace orbitsum::oracle {

/// Deterministic random stream. Gaussians are produced by an explicit
/// Box-Muller transform on raw 64-bit engine words, so a given seed yields
/// the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();
  /// Standard normal.
  double gaussian();
  /// Standard complex normal (unit total variance).
  std::complex<double> complex_gaussian();

 private:
  std::uint64_t next_word();
  std::uint64_t state_;
};

/// Independent per-task stream seed (splitmix64 of root and index).
std::uint64_t derive_stream_seed(std::uint64_t root, std::uint64_t index);

/// Haar-distributed special unitary matrix: complex Ginibre sample, QR with
/// the R-diagonal phase correction, then a global m-th-root-of-determinant
/// correction into SU(m).
GroupElement haar_sample(int m, Rng& rng);

/// Singular-value picture around the rank cut of the stacked
/// complement-projector matrix.
struct GapStats {
  double sigma_above = 0.0;  // smallest singular value counted as nonzero
  double sigma_below = 0.0;  // largest singular value counted as zero
  double ratio = 0.0;        // confidence ratio at the cut
};

struct Intersection {
  int dimension = 0;
  GapStats gap;
  bool confident = false;  // gap ratio >= 1e4
};

/// Dimension of the intersection of the spanned subspaces: the nullity of
/// the matrix stacking the projectors onto each orthogonal complement,
/// counted as singular values below tol. The gap ratio at the cut is the
/// confidence signal; callers treat unconfident samples as inconclusive.
Intersection intersection_dimension(const std::vector<SubspaceBasis>& bases, double tol);

enum class OracleOutcome { OpenCertificate, SingularEvidence, Inconclusive };

std::string to_string(OracleOutcome outcome);

struct SampleRecord {
  int dimension = 0;
  double gap_ratio = 0.0;
  bool confident = false;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct GapSummary {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double median_ratio = 0.0;

  friend bool operator==(const GapSummary&, const GapSummary&) = default;
};

/// Outcome of a randomized verification run. A confident zero-dimensional
/// sample is a certificate of openness; all-samples-nontrivial is evidence
/// of singularity, never proof.
struct OracleVerdict {
  OracleOutcome outcome = OracleOutcome::Inconclusive;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::map<int, int> dimension_histogram;
  std::vector<SampleRecord> per_sample;
  GapSummary gaps;

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

/// Draws `samples` independent tuples of Haar conjugators, intersects the
/// conjugated centralizers of fixed representatives, and aggregates.
/// Deterministic for a given seed; samples are evaluated on a work pool with
/// one derived stream per sample, so the thread count does not affect the
/// result.
OracleVerdict numeric_classify(const rootsys::OrbitTuple& t, int samples, double tol,
                               std::uint64_t seed, int threads = 1);

}  // namespace orbitsum::oracle
