#include "mcone/quantum.hpp"

#include "mcone/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mcone::quantum {

namespace {

double off_diagonal_norm(const DMatrix& a) {
  double s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

void rotate(DMatrix& a, DMatrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = c * arp - s * arq;
    a(r, q) = a(q, r) = s * arp + c * arq;
  }
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

}  // namespace

EigenSystem jacobi_eigen(const DMatrix& input, double threshold, int max_sweeps) {
  if (input.rows() != input.cols()) throw InputError("jacobi_eigen: matrix must be square");
  const Eigen::Index n = input.rows();
  DMatrix a = 0.5 * (input + input.transpose());
  DMatrix v = DMatrix::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);

  EigenSystem out;
  bool polished = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const bool converged = off_diagonal_norm(a) <= threshold * scale;
    if (converged && polished) break;
    if (converged) polished = true;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    out.sweeps = sweep + 1;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

SymmetricMatrixCone::SymmetricMatrixCone(std::size_t d, double tol) : d_(d), tol_(tol) {
  if (d == 0) throw InputError("SymmetricMatrixCone: size must be positive");
  if (!(tol > 0)) throw InputError("SymmetricMatrixCone: tolerance must be positive");
}

void SymmetricMatrixCone::require_shape(const DMatrix& m, const char* what) const {
  if (m.rows() != static_cast<Eigen::Index>(d_) || m.cols() != static_cast<Eigen::Index>(d_))
    throw InputError(std::string(what) + ": expected a " + std::to_string(d_) + "x" +
                     std::to_string(d_) + " matrix");
}

DVector SymmetricMatrixCone::flatten(const DMatrix& m) const {
  require_shape(m, "flatten");
  DVector out(static_cast<Eigen::Index>(dimension()));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j) out(k++) = m(i, j);
  return out;
}

DMatrix SymmetricMatrixCone::unflatten(const DVector& v) const {
  if (v.size() != static_cast<Eigen::Index>(dimension()))
    throw InputError("unflatten: wrong vector length");
  const auto d = static_cast<Eigen::Index>(d_);
  DMatrix m(d, d);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i; j < d; ++j) m(i, j) = m(j, i) = v(k++);
  return m;
}

bool SymmetricMatrixCone::is_symmetric(const DMatrix& m) const {
  require_shape(m, "is_symmetric");
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol_;
}

bool SymmetricMatrixCone::is_psd(const DMatrix& m) const {
  if (!is_symmetric(m)) return false;
  const auto eig = jacobi_eigen(m);
  return eig.values(0) >= -tol_;
}

double SymmetricMatrixCone::trace_norm(const DMatrix& m) const {
  require_shape(m, "trace_norm");
  return jacobi_eigen(m).values.cwiseAbs().sum();
}

SpectralDecomposition spectral_minimal_decomposition(const SymmetricMatrixCone& cone,
                                                     const DMatrix& z) {
  if (!cone.is_symmetric(z)) throw InputError("spectral_minimal_decomposition: input is not symmetric");
  const auto eig = jacobi_eigen(z);
  const auto d = static_cast<Eigen::Index>(cone.size());
  SpectralDecomposition out;
  out.positive = DMatrix::Zero(d, d);
  out.negative = DMatrix::Zero(d, d);
  out.positive_projection = DMatrix::Zero(d, d);
  out.negative_projection = DMatrix::Zero(d, d);
  out.eigenvalues = eig.values;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lambda = eig.values(k);
    const DMatrix outer = eig.vectors.col(k) * eig.vectors.col(k).transpose();
    if (lambda > 0) out.positive += lambda * outer;
    if (lambda < 0) out.negative -= lambda * outer;
    if (lambda > cone.tol()) out.positive_projection += outer;
    if (lambda < -cone.tol()) out.negative_projection += outer;
  }
  return out;
}

DMatrix range_projection(const SymmetricMatrixCone& cone, const DMatrix& psd) {
  const auto eig = jacobi_eigen(psd);
  const auto d = static_cast<Eigen::Index>(cone.size());
  DMatrix p = DMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k)
    if (eig.values(k) > cone.tol()) p += eig.vectors.col(k) * eig.vectors.col(k).transpose();
  return p;
}

double operator_norm(const DMatrix& m) {
  const auto eig = jacobi_eigen(m.transpose() * m);
  return std::sqrt(std::max(0.0, eig.values(eig.values.size() - 1)));
}

bool quantum_orthogonal(const SymmetricMatrixCone& cone, const DMatrix& x, const DMatrix& y) {
  if (!cone.is_psd(x) || !cone.is_psd(y))
    throw InputError("quantum_orthogonal: inputs must be positive semidefinite");
  if (x.trace() <= cone.tol() || y.trace() <= cone.tol())
    throw InputError("quantum_orthogonal: inputs must be nonzero");
  return operator_norm(range_projection(cone, x) * range_projection(cone, y)) <= cone.tol();
}

double normalized_trace_distance(const SymmetricMatrixCone& cone, const DMatrix& x,
                                 const DMatrix& y) {
  if (!cone.is_psd(x) || !cone.is_psd(y))
    throw InputError("normalized_trace_distance: inputs must be positive semidefinite");
  return cone.trace_norm(x / x.trace() - y / y.trace());
}

}  // namespace mcone::quantum
