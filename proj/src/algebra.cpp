#include "orbitsum/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace orbitsum::oracle {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kGroupTol = 1e-10;

double spectral_norm(const Matrix& a) {
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

}  // namespace

AlgebraElement::AlgebraElement(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw std::invalid_argument("AlgebraElement: need a square matrix");
  }
  const Matrix herm = matrix_ + matrix_.adjoint();
  if (herm.cwiseAbs().maxCoeff() > kAlgebraTol) {
    throw std::invalid_argument("AlgebraElement: matrix is not anti-Hermitian");
  }
  if (std::abs(matrix_.trace()) > kAlgebraTol) {
    throw std::invalid_argument("AlgebraElement: matrix is not traceless");
  }
}

GroupElement::GroupElement(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw std::invalid_argument("GroupElement: need a square matrix");
  }
  const int m = static_cast<int>(matrix_.rows());
  const Matrix defect = matrix_ * matrix_.adjoint() - Matrix::Identity(m, m);
  if (spectral_norm(defect) > kGroupTol) {
    throw std::invalid_argument("GroupElement: matrix is not unitary");
  }
  if (std::abs(matrix_.determinant() - std::complex<double>(1.0, 0.0)) > kGroupTol) {
    throw std::invalid_argument("GroupElement: determinant is not 1");
  }
}

AlgebraElement algebra_representative(const rootsys::MultiplicityPartition& p) {
  const int m = p.m();
  double weighted = 0.0;
  for (int j = 0; j < p.count(); ++j) weighted += p.parts()[j] * (j + 1.0);
  const double mean = weighted / m;

  Matrix x = Matrix::Zero(m, m);
  int pos = 0;
  for (int j = 0; j < p.count(); ++j) {
    const double lambda = (j + 1.0) - mean;
    for (int r = 0; r < p.parts()[j]; ++r) {
      x(pos, pos) = std::complex<double>(0.0, lambda);
      ++pos;
    }
  }
  // remove rounding residue on the trace, uniformly so classes stay
  // bit-identical
  const std::complex<double> residue = x.trace() / static_cast<double>(m);
  for (int i = 0; i < m; ++i) x(i, i) -= residue;
  return AlgebraElement(std::move(x));
}

GroupElement group_representative(const rootsys::MultiplicityPartition& p) {
  const int m = p.m();
  const double step = 2.0 * std::numbers::pi / (m + 1.0);
  double weighted = 0.0;
  for (int j = 0; j < p.count(); ++j) weighted += p.parts()[j] * (j + 1.0);
  const double shift = -step * weighted / m;

  Matrix x = Matrix::Zero(m, m);
  int pos = 0;
  for (int j = 0; j < p.count(); ++j) {
    const double theta = step * (j + 1.0) + shift;
    for (int r = 0; r < p.parts()[j]; ++r) {
      x(pos, pos) = std::polar(1.0, theta);
      ++pos;
    }
  }
  // remove the rounding residue of the determinant phase
  const double residue = std::arg(x.determinant());
  x *= std::polar(1.0, -residue / m);
  return GroupElement(std::move(x));
}

const std::vector<Matrix>& su_basis(int m) {
  if (m < 1) throw std::invalid_argument("su_basis: m must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(m) * m - 1);
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < m; ++q) {
      Matrix a = Matrix::Zero(m, m);
      a(p, q) = inv_sqrt2;
      a(q, p) = -inv_sqrt2;
      basis.push_back(a);
      Matrix b = Matrix::Zero(m, m);
      b(p, q) = std::complex<double>(0.0, inv_sqrt2);
      b(q, p) = std::complex<double>(0.0, inv_sqrt2);
      basis.push_back(b);
    }
  }
  for (int j = 1; j < m; ++j) {
    Matrix d = Matrix::Zero(m, m);
    const double scale = 1.0 / std::sqrt(j * (j + 1.0));
    for (int r = 0; r < j; ++r) d(r, r) = std::complex<double>(0.0, scale);
    d(j, j) = std::complex<double>(0.0, -j * scale);
    basis.push_back(d);
  }
  return cache.emplace(m, std::move(basis)).first->second;
}

Eigen::VectorXd to_coords(const Matrix& y) {
  const int m = static_cast<int>(y.rows());
  const auto& basis = su_basis(m);
  Eigen::VectorXd coords(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    coords(static_cast<Eigen::Index>(a)) = (basis[a].adjoint() * y).trace().real();
  }
  return coords;
}

Matrix from_coords(int m, const Eigen::VectorXd& coords) {
  const auto& basis = su_basis(m);
  if (coords.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("from_coords: coordinate dimension mismatch");
  }
  Matrix y = Matrix::Zero(m, m);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    y += coords(static_cast<Eigen::Index>(a)) * basis[a];
  }
  return y;
}

SubspaceBasis::SubspaceBasis(int m, Eigen::MatrixXd coords) : m_(m), coords_(std::move(coords)) {
  const Eigen::Index n = static_cast<Eigen::Index>(m) * m - 1;
  if (coords_.rows() != n) {
    throw std::invalid_argument("SubspaceBasis: ambient dimension must be m^2 - 1");
  }
  if (coords_.cols() > 0) {
    const Eigen::MatrixXd gram = coords_.transpose() * coords_;
    const Eigen::MatrixXd defect =
        gram - Eigen::MatrixXd::Identity(coords_.cols(), coords_.cols());
    if (defect.cwiseAbs().maxCoeff() > 1e-10) {
      throw std::invalid_argument("SubspaceBasis: columns are not orthonormal");
    }
  }
}

namespace {

// one cluster = list of column indices of the diagonalizing unitary
using Clusters = std::vector<std::vector<int>>;

// basis of {U B U* : B block anti-Hermitian, tr B = 0} given the clusters
SubspaceBasis commutant_basis(int m, const Matrix& u, const Clusters& clusters) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> elements;
  for (const auto& cluster : clusters) {
    for (std::size_t a = 0; a < cluster.size(); ++a) {
      for (std::size_t b = a + 1; b < cluster.size(); ++b) {
        const int p = cluster[a];
        const int q = cluster[b];
        Matrix real_pair = Matrix::Zero(m, m);
        real_pair(p, q) = inv_sqrt2;
        real_pair(q, p) = -inv_sqrt2;
        elements.push_back(u * real_pair * u.adjoint());
        Matrix imag_pair = Matrix::Zero(m, m);
        imag_pair(p, q) = std::complex<double>(0.0, inv_sqrt2);
        imag_pair(q, p) = std::complex<double>(0.0, inv_sqrt2);
        elements.push_back(u * imag_pair * u.adjoint());
      }
    }
  }
  // the traceless diagonal directions commute with any clustered diagonal
  for (int j = 1; j < m; ++j) {
    Matrix d = Matrix::Zero(m, m);
    const double scale = 1.0 / std::sqrt(j * (j + 1.0));
    for (int r = 0; r < j; ++r) d(r, r) = std::complex<double>(0.0, scale);
    d(j, j) = std::complex<double>(0.0, -j * scale);
    elements.push_back(u * d * u.adjoint());
  }

  Eigen::MatrixXd coords(static_cast<Eigen::Index>(m) * m - 1,
                         static_cast<Eigen::Index>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    coords.col(static_cast<Eigen::Index>(a)) = to_coords(elements[a]);
  }
  return SubspaceBasis(m, std::move(coords));
}

// contiguous clustering of sorted values; gaps inside a cluster are at most
// tol, gaps between clusters must exceed min_gap_factor * tol
Clusters cluster_sorted(const std::vector<std::pair<double, int>>& sorted, double tol,
                        double min_gap_factor) {
  Clusters clusters;
  clusters.push_back({sorted.front().second});
  double previous = sorted.front().first;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double gap = sorted[i].first - previous;
    if (gap > tol) {
      if (gap < min_gap_factor * tol) {
        throw std::runtime_error(
            "centralizer_basis: eigenvalue clusters are not well separated");
      }
      clusters.push_back({});
    }
    clusters.back().push_back(sorted[i].second);
    previous = sorted[i].first;
  }
  return clusters;
}

}  // namespace

SubspaceBasis centralizer_basis(const AlgebraElement& x, double cluster_tol) {
  const int m = x.m();
  const Matrix hermitian = std::complex<double>(0.0, -1.0) * x.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> eigen(hermitian);
  if (eigen.info() != Eigen::Success) {
    throw std::runtime_error("centralizer_basis: eigendecomposition failed");
  }

  std::vector<std::pair<double, int>> sorted;
  sorted.reserve(m);
  for (int i = 0; i < m; ++i) sorted.emplace_back(eigen.eigenvalues()(i), i);
  std::sort(sorted.begin(), sorted.end());
  const Clusters clusters = cluster_sorted(sorted, cluster_tol, 1e3);
  return commutant_basis(m, eigen.eigenvectors(), clusters);
}

SubspaceBasis centralizer_basis(const GroupElement& x, double cluster_tol) {
  const int m = x.m();
  Eigen::ComplexSchur<Matrix> schur(x.matrix());
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("centralizer_basis: Schur decomposition failed");
  }
  // a unitary matrix is normal, so the Schur form must be diagonal
  Matrix t = schur.matrixT();
  t.diagonal().setZero();
  if (t.cwiseAbs().maxCoeff() > 1e-8) {
    throw std::runtime_error("centralizer_basis: group element is not normal");
  }

  std::vector<double> angles(m);
  for (int i = 0; i < m; ++i) angles[i] = std::arg(schur.matrixT()(i, i));

  // cut the circle at its widest empty arc, then cluster linearly
  std::vector<std::pair<double, int>> sorted;
  sorted.reserve(m);
  for (int i = 0; i < m; ++i) sorted.emplace_back(angles[i], i);
  std::sort(sorted.begin(), sorted.end());
  int cut = 0;
  double widest = 2.0 * std::numbers::pi - (sorted.back().first - sorted.front().first);
  for (int i = 1; i < m; ++i) {
    const double gap = sorted[i].first - sorted[i - 1].first;
    if (gap > widest) {
      widest = gap;
      cut = i;
    }
  }
  std::rotate(sorted.begin(), sorted.begin() + cut, sorted.end());
  for (int i = 1; i < m; ++i) {
    if (sorted[i].first < sorted[i - 1].first) {
      sorted[i].first += 2.0 * std::numbers::pi;
    }
  }

  const Clusters clusters = cluster_sorted(sorted, cluster_tol, 1e3);
  if (clusters.size() > 1 && widest < 1e3 * cluster_tol) {
    throw std::runtime_error("centralizer_basis: eigenvalue clusters are not well separated");
  }
  return commutant_basis(m, schur.matrixU(), clusters);
}

SubspaceBasis conjugate_basis(const SubspaceBasis& b, const GroupElement& g) {
  if (b.m() != g.m()) {
    throw std::invalid_argument("conjugate_basis: dimension mismatch");
  }
  Eigen::MatrixXd coords(b.ambient_dim(), b.dim());
  for (int c = 0; c < b.dim(); ++c) {
    const Matrix y = from_coords(b.m(), b.coords().col(c));
    coords.col(c) = to_coords(g.matrix() * y * g.matrix().adjoint());
  }
  return SubspaceBasis(b.m(), std::move(coords));
}

}  // namespace orbitsum::oracle
