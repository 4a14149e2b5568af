#include "pll/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace pll {

namespace {

void check_finite(const Matrix& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("matrix has non-finite entries");
  }
}

}  // namespace

Matrix pseudoinverse(const Matrix& m, const Tolerance& tol) {
  check_finite(m);
  if (m.rows() == 0 || m.cols() == 0) {
    return Matrix::Zero(m.cols(), m.rows());
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const double thresh = tol.threshold(sv.size() > 0 ? sv(0) : 0.0);
  Vector inv = Vector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Matrix projector_onto_kernel(const Matrix& m, const Tolerance& tol) {
  Matrix p = Matrix::Identity(m.cols(), m.cols()) - pseudoinverse(m, tol) * m;
  return 0.5 * (p + p.transpose());
}

Spectrum symmetric_eigenvalues(const Matrix& m, const Tolerance& tol) {
  check_finite(m);
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("symmetric_eigenvalues requires a square matrix");
  }
  Spectrum spec;
  if (m.rows() == 0) return spec;

  const double scale = m.cwiseAbs().maxCoeff();
  const double defect = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (defect > tol.threshold(scale)) {
    throw NotSymmetric(defect);
  }
  Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  const Vector& ev = es.eigenvalues();
  spec.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());

  const double largest =
      spec.eigenvalues.empty()
          ? 0.0
          : std::max(std::abs(spec.eigenvalues.front()), std::abs(spec.eigenvalues.back()));
  const double thresh = tol.threshold(largest);
  for (double v : spec.eigenvalues) {
    if (std::abs(v) <= thresh) {
      ++spec.zero_multiplicity;
    } else if (v > thresh && !spec.spectral_gap) {
      spec.spectral_gap = v;
    }
  }
  return spec;
}

Matrix orthonormal_kernel_basis(const Matrix& m, const Tolerance& tol) {
  check_finite(m);
  if (m.cols() == 0) return Matrix::Zero(0, 0);
  if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double thresh = tol.threshold(sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) ++r;
  }
  return svd.matrixV().rightCols(m.cols() - r);
}

Eigen::Index rank(const Matrix& m, const Tolerance& tol) {
  check_finite(m);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& sv = svd.singularValues();
  const double thresh = tol.threshold(sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) ++r;
  }
  return r;
}

}  // namespace pll
