#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace mcone::quantum {

using DMatrix = Eigen::MatrixXd;
using DVector = Eigen::VectorXd;

/// Eigenvalues (ascending) and orthonormal eigenvectors as columns.
struct EigenSystem {
  DVector values;
  DMatrix vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a real symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below threshold * |A|_F, then runs one
/// more sweep.
EigenSystem jacobi_eigen(const DMatrix& a, double threshold = 1e-9, int max_sweeps = 100);

/// Real symmetric d x d matrices, ordered by the positive semidefinite cone,
/// with the trace as charge. Scalars are floating point; `tol` is the
/// absolute tolerance for symmetry, semidefiniteness and rank decisions.
class SymmetricMatrixCone {
 public:
  explicit SymmetricMatrixCone(std::size_t d, double tol = 1e-9);

  std::size_t size() const { return d_; }
  std::size_t dimension() const { return d_ * (d_ + 1) / 2; }
  double tol() const { return tol_; }

  /// Upper triangle, row by row.
  DVector flatten(const DMatrix& m) const;
  DMatrix unflatten(const DVector& v) const;

  bool is_symmetric(const DMatrix& m) const;
  bool is_psd(const DMatrix& m) const;

  double charge(const DMatrix& m) const { return m.trace(); }
  double trace_norm(const DMatrix& m) const;

 private:
  void require_shape(const DMatrix& m, const char* what) const;

  std::size_t d_;
  double tol_;
};

struct SpectralDecomposition {
  DMatrix positive;               // Z+
  DMatrix negative;               // Z-
  DMatrix positive_projection;    // onto range(Z+)
  DMatrix negative_projection;    // onto range(Z-)
  DVector eigenvalues;
};

SpectralDecomposition spectral_minimal_decomposition(const SymmetricMatrixCone& cone,
                                                     const DMatrix& z);

/// Projection onto the span of eigenvectors with eigenvalue > tol.
DMatrix range_projection(const SymmetricMatrixCone& cone, const DMatrix& psd);

/// Spectral norm of a (not necessarily symmetric) matrix via Jacobi on M^T M.
double operator_norm(const DMatrix& m);

/// |P_X P_Y| <= tol for the range projections of PSD X and Y.
bool quantum_orthogonal(const SymmetricMatrixCone& cone, const DMatrix& x, const DMatrix& y);

/// |X/tr X - Y/tr Y|_1 (equals 2 exactly for orthogonal X, Y).
double normalized_trace_distance(const SymmetricMatrixCone& cone, const DMatrix& x,
                                 const DMatrix& y);

}  // namespace mcone::quantum
