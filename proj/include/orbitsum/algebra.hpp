#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "orbitsum/rootsys.hpp"

namespace orbitsum::oracle {

using Matrix = Eigen::MatrixXcd;

/// Element of su(m): anti-Hermitian and traceless, checked at construction
/// (entrywise 1e-12 for anti-Hermitian symmetry, 1e-12 for the trace).
class AlgebraElement {
 public:
  explicit AlgebraElement(Matrix matrix);

  const Matrix& matrix() const { return matrix_; }
  int m() const { return static_cast<int>(matrix_.rows()); }

 private:
  Matrix matrix_;
};

/// Element of SU(m): unitary within 1e-10 (spectral norm) with det within
/// 1e-10 of 1, checked at construction.
class GroupElement {
 public:
  explicit GroupElement(Matrix matrix);

  const Matrix& matrix() const { return matrix_; }
  int m() const { return static_cast<int>(matrix_.rows()); }

 private:
  Matrix matrix_;
};

/// Diagonal representative whose annihilating subsystem is exactly p:
/// entries i*(j - mean) on the j-th eigenvalue class, so distinct classes
/// are separated by at least 1 and the trace vanishes.
AlgebraElement algebra_representative(const rootsys::MultiplicityPartition& p);

/// Diagonal special unitary representative: phases 2*pi*j/(m+1) per class,
/// shifted by a common phase to put the determinant at 1. Distinct classes
/// are separated by at least 2*pi/(m+1) and never congruent mod 2*pi.
GroupElement group_representative(const rootsys::MultiplicityPartition& p);

/// Fixed orthonormal basis of su(m) as a real inner-product space of
/// dimension m^2 - 1, orthonormal for <A,B> = Re tr(A* B): the m(m-1)/2
/// antisymmetric-real pairs, the symmetric-imaginary pairs, then m-1
/// traceless imaginary diagonals.
const std::vector<Matrix>& su_basis(int m);

/// Coordinates of Y in su_basis(m).
Eigen::VectorXd to_coords(const Matrix& y);

/// Inverse of to_coords.
Matrix from_coords(int m, const Eigen::VectorXd& coords);

/// Orthonormal spanning set of a real subspace of su(m), stored as
/// coordinate columns ((m^2 - 1) x dim, pairwise orthonormal within 1e-10).
class SubspaceBasis {
 public:
  SubspaceBasis(int m, Eigen::MatrixXd coords);

  int m() const { return m_; }
  int ambient_dim() const { return static_cast<int>(coords_.rows()); }
  int dim() const { return static_cast<int>(coords_.cols()); }
  const Eigen::MatrixXd& coords() const { return coords_; }

 private:
  int m_;
  Eigen::MatrixXd coords_;
};

/// Orthonormal basis of the centralizer {Y in su(m) : [X, Y] = 0}. The
/// eigenvalue clusters of X must be separated by at least 1e3 * cluster_tol
/// or a std::runtime_error signals a bad representative.
SubspaceBasis centralizer_basis(const AlgebraElement& x, double cluster_tol = 1e-9);

/// Orthonormal basis of {Y in su(m) : Ad(x^{-1}) Y = Y}, the tangent
/// centralizer of a group element; same clustering contract, with
/// eigenvalues compared as angles on the circle.
SubspaceBasis centralizer_basis(const GroupElement& x, double cluster_tol = 1e-9);

/// Basis of Ad(g) applied to the spanned subspace. Ad(g) is an isometry, so
/// orthonormality is preserved.
SubspaceBasis conjugate_basis(const SubspaceBasis& b, const GroupElement& g);

}  // namespace orbitsum::oracle
