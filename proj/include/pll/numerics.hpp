#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pll {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct NotSymmetric : std::runtime_error {
  explicit NotSymmetric(double defect)
      : std::runtime_error("matrix is not symmetric (defect " +
                           std::to_string(defect) + ")") {}
};

/// Shared rank / zero-classification policy. The effective threshold for a
/// matrix is max(absolute_floor, relative * largest singular value).
struct Tolerance {
  double relative = 1e-9;
  double absolute_floor = 1e-12;

  double threshold(double largest_magnitude) const {
    return std::max(absolute_floor, relative * largest_magnitude);
  }
};

/// Sorted eigenvalue multiset of a self-adjoint PSD operator, with the
/// zero eigenvalues classified by the tolerance policy.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::size_t zero_multiplicity = 0;
  std::optional<double> spectral_gap;  // smallest eigenvalue above threshold
};

/// Moore-Penrose pseudoinverse. Singular values below the effective
/// threshold are treated as zero.
Matrix pseudoinverse(const Matrix& m, const Tolerance& tol = {});

/// Orthogonal projector onto ker(m), computed as I - m^+ m.
Matrix projector_onto_kernel(const Matrix& m, const Tolerance& tol = {});

/// Full spectrum of (m + m^T)/2. Throws NotSymmetric if the symmetry
/// defect exceeds the effective threshold.
Spectrum symmetric_eigenvalues(const Matrix& m, const Tolerance& tol = {});

/// Orthonormal basis of ker(m) as matrix columns (possibly zero columns).
Matrix orthonormal_kernel_basis(const Matrix& m, const Tolerance& tol = {});

/// Number of singular values above the effective threshold.
Eigen::Index rank(const Matrix& m, const Tolerance& tol = {});

}  // namespace pll
