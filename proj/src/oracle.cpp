#include "orbitsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orbitsum/parallel.hpp"

namespace orbitsum::oracle {

namespace {

constexpr double kConfidenceRatio = 1e4;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_word() { return splitmix64(state_); }

double Rng::uniform() {
  return static_cast<double>(next_word() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  // Box-Muller; the first uniform is pushed away from zero so the log is finite
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> Rng::complex_gaussian() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-std::log(u1));
  return std::polar(radius, 2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_stream_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t state = root ^ (0xd1b54a32d192ed03ULL * (index + 1));
  splitmix64(state);
  return splitmix64(state);
}

GroupElement haar_sample(int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("haar_sample: m must be positive");
  Matrix ginibre(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      ginibre(r, c) = rng.complex_gaussian();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity of QR so the distribution is Haar
  for (int c = 0; c < m; ++c) {
    const std::complex<double> d = r(c, c);
    const double mag = std::abs(d);
    q.col(c) *= mag > 0.0 ? d / mag : std::complex<double>(1.0, 0.0);
  }
  // rotate into SU(m)
  const double det_phase = std::arg(q.determinant());
  q *= std::polar(1.0, -det_phase / m);
  return GroupElement(std::move(q));
}

Intersection intersection_dimension(const std::vector<SubspaceBasis>& bases, double tol) {
  if (bases.empty()) throw std::invalid_argument("intersection_dimension: need at least one basis");
  if (tol <= 0.0) throw std::invalid_argument("intersection_dimension: tol must be positive");
  const int n = bases.front().ambient_dim();
  for (const auto& b : bases) {
    if (b.ambient_dim() != n) {
      throw std::invalid_argument("intersection_dimension: ambient dimension mismatch");
    }
  }

  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(bases.size()) * n, n);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto& c = bases[i].coords();
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = identity - c * c.transpose();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const Eigen::VectorXd sigma = svd.singularValues();  // descending
  int dimension = 0;
  for (Eigen::Index i = sigma.size() - 1; i >= 0 && sigma(i) < tol; --i) ++dimension;

  constexpr double kFloor = 1e-300;
  Intersection result;
  result.dimension = dimension;
  if (dimension == 0) {
    result.gap.sigma_above = sigma(sigma.size() - 1);
    result.gap.sigma_below = 0.0;
    result.gap.ratio = result.gap.sigma_above / tol;
  } else if (dimension == n) {
    result.gap.sigma_above = 0.0;
    result.gap.sigma_below = sigma(0);
    result.gap.ratio = tol / std::max(sigma(0), kFloor);
  } else {
    result.gap.sigma_above = sigma(n - dimension - 1);
    result.gap.sigma_below = sigma(n - dimension);
    result.gap.ratio = result.gap.sigma_above / std::max(result.gap.sigma_below, kFloor);
  }
  result.confident = result.gap.ratio >= kConfidenceRatio;
  return result;
}

std::string to_string(OracleOutcome outcome) {
  switch (outcome) {
    case OracleOutcome::OpenCertificate: return "OpenCertificate";
    case OracleOutcome::SingularEvidence: return "SingularEvidence";
    case OracleOutcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

OracleVerdict numeric_classify(const rootsys::OrbitTuple& t, int samples, double tol,
                               std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("numeric_classify: need at least one sample");
  if (t.m() > 8) throw std::invalid_argument("numeric_classify: limited to m <= 8");
  const int k = t.k();

  // fixed representatives; their centralizers are conjugated per sample
  std::vector<SubspaceBasis> centralizers;
  centralizers.reserve(k);
  for (const auto& p : t.partitions()) {
    if (t.kind() == rootsys::CaseKind::algebra) {
      centralizers.push_back(centralizer_basis(algebra_representative(p)));
    } else {
      centralizers.push_back(centralizer_basis(group_representative(p)));
    }
  }

  OracleVerdict verdict;
  verdict.samples = samples;
  verdict.seed = seed;
  verdict.tol = tol;
  verdict.per_sample.assign(samples, SampleRecord{});

  util::parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t s) {
    Rng rng(derive_stream_seed(seed, s));
    std::vector<SubspaceBasis> conjugated;
    conjugated.reserve(k);
    for (int i = 0; i < k; ++i) {
      conjugated.push_back(conjugate_basis(centralizers[i], haar_sample(t.m(), rng)));
    }
    const Intersection section = intersection_dimension(conjugated, tol);
    verdict.per_sample[s] = SampleRecord{section.dimension, section.gap.ratio, section.confident};
  });

  bool all_confident_nontrivial = true;
  bool any_confident_zero = false;
  std::vector<double> ratios;
  ratios.reserve(samples);
  for (const auto& record : verdict.per_sample) {
    ++verdict.dimension_histogram[record.dimension];
    ratios.push_back(record.gap_ratio);
    if (record.confident && record.dimension == 0) any_confident_zero = true;
    if (!record.confident || record.dimension < 1) all_confident_nontrivial = false;
  }
  if (any_confident_zero) {
    verdict.outcome = OracleOutcome::OpenCertificate;
  } else if (all_confident_nontrivial) {
    verdict.outcome = OracleOutcome::SingularEvidence;
  } else {
    verdict.outcome = OracleOutcome::Inconclusive;
  }

  std::sort(ratios.begin(), ratios.end());
  verdict.gaps.min_ratio = ratios.front();
  verdict.gaps.max_ratio = ratios.back();
  verdict.gaps.median_ratio = ratios[ratios.size() / 2];
  return verdict;
}

}  // namespace orbitsum::oracle
