#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pll/numerics.hpp"

using pll::Matrix;
using pll::Tolerance;

namespace {

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::normal_distribution<double> dist;
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("pseudoinverse satisfies the four Penrose conditions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = random_matrix(rng, size(rng), size(rng));
    Matrix p = pll::pseudoinverse(a);
    CHECK(max_abs(a * p * a - a) <= 1e-8);
    CHECK(max_abs(p * a * p - p) <= 1e-8);
    CHECK(max_abs((a * p).transpose() - a * p) <= 1e-8);
    CHECK(max_abs((p * a).transpose() - p * a) <= 1e-8);
  }
}

TEST_CASE("pseudoinverse commutes with transposition") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 7, 4);
    Matrix lhs = pll::pseudoinverse(Matrix(a.transpose()));
    Matrix rhs = pll::pseudoinverse(a).transpose();
    CHECK(max_abs(lhs - rhs) <= 1e-8);
  }
}

TEST_CASE("pseudoinverse of an injective map is a left inverse") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 9, 4);  // full column rank almost surely
    Matrix p = pll::pseudoinverse(a);
    CHECK(max_abs(p * a - Matrix::Identity(4, 4)) <= 1e-8);
  }
}

TEST_CASE("pseudoinverse treats rank-deficient matrices correctly") {
  Matrix a(2, 2);
  a << 1, 1, 1, 1;
  Matrix p = pll::pseudoinverse(a);
  Matrix expected(2, 2);
  expected << 0.25, 0.25, 0.25, 0.25;
  CHECK(max_abs(p - expected) <= 1e-12);
}

TEST_CASE("kernel projector is an orthogonal projector annihilated by m") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(rng, 4, 8);
    Matrix p = pll::projector_onto_kernel(a);
    CHECK(max_abs(p * p - p) <= 1e-8);
    CHECK(max_abs(p.transpose() - p) <= 1e-8);
    CHECK(max_abs(a * p) <= 1e-8);
  }
}

TEST_CASE("symmetric_eigenvalues on a golden graph Laplacian") {
  Matrix l(3, 3);
  l << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  pll::Spectrum s = pll::symmetric_eigenvalues(l);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(s.eigenvalues[2] == doctest::Approx(3.0));
  CHECK(s.zero_multiplicity == 1);
  REQUIRE(s.spectral_gap.has_value());
  CHECK(*s.spectral_gap == doctest::Approx(1.0));
}

TEST_CASE("symmetric_eigenvalues rejects asymmetric input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(pll::symmetric_eigenvalues(m), pll::NotSymmetric);
}

TEST_CASE("symmetric_eigenvalues handles empty and all-zero operators") {
  pll::Spectrum empty = pll::symmetric_eigenvalues(Matrix::Zero(0, 0));
  CHECK(empty.eigenvalues.empty());
  CHECK(empty.zero_multiplicity == 0);
  CHECK_FALSE(empty.spectral_gap.has_value());

  pll::Spectrum zero = pll::symmetric_eigenvalues(Matrix::Zero(3, 3));
  CHECK(zero.zero_multiplicity == 3);
  CHECK_FALSE(zero.spectral_gap.has_value());
}

TEST_CASE("orthonormal_kernel_basis spans the kernel orthonormally") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(rng, 3, 7);
    Matrix q = pll::orthonormal_kernel_basis(a);
    CHECK(q.cols() == 7 - pll::rank(a));
    CHECK(max_abs(a * q) <= 1e-8);
    CHECK(max_abs(q.transpose() * q - Matrix::Identity(q.cols(), q.cols())) <= 1e-8);
  }
}

TEST_CASE("rank matches known values") {
  Matrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(pll::rank(a) == 2);
  CHECK(pll::rank(Matrix::Identity(5, 5)) == 5);
  CHECK(pll::rank(Matrix::Zero(4, 6)) == 0);
}

TEST_CASE("tolerance threshold scales with the matrix magnitude") {
  Tolerance tol;
  CHECK(tol.threshold(0.0) == 1e-12);
  CHECK(tol.threshold(1e6) == doctest::Approx(1e-3));
  Matrix a(2, 2);
  a << 1e6, 0, 0, 1e-5;  // second singular value below 1e-9 * 1e6
  CHECK(pll::rank(a, tol) == 1);
}
