#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "pll/builders.hpp"
#include "pll/complex.hpp"

using pll::Matrix;
using pll::Simplex;
using pll::SimplicialComplex;

namespace {

SimplicialComplex random_vr(std::mt19937& rng, int npoints, double scale) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<pll::Vector> pts;
  for (int i = 0; i < npoints; ++i) {
    pll::Vector p(2);
    p << coord(rng), coord(rng);
    pts.push_back(p);
  }
  return pll::vietoris_rips(pll::PointCloud::from_points(pts), scale, 3);
}

}  // namespace

TEST_CASE("build computes the face closure in canonical order") {
  SimplicialComplex k = SimplicialComplex::build({{0, 1, 2}});
  CHECK(k.max_dimension() == 2);
  CHECK(k.size(0) == 3);
  CHECK(k.size(1) == 3);
  CHECK(k.size(2) == 1);
  CHECK(k.simplices(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(k.index_of({0, 2}) == 1);
  CHECK(k.index_of({1, 3}) == -1);
  CHECK(k.contains({1}));
  CHECK_FALSE(k.has_vertex(5));
}

TEST_CASE("build rejects malformed simplices") {
  CHECK_THROWS_AS(SimplicialComplex::build({{2, 1}}), pll::InvalidSimplex);
  CHECK_THROWS_AS(SimplicialComplex::build({{1, 1}}), pll::InvalidSimplex);
}

TEST_CASE("build is deterministic under input permutation") {
  std::vector<Simplex> top = {{0, 1, 2}, {1, 2, 3}, {3, 4}, {0, 4}};
  SimplicialComplex a = SimplicialComplex::build(top);
  std::reverse(top.begin(), top.end());
  SimplicialComplex b = SimplicialComplex::build(top);
  CHECK(a.all_simplices() == b.all_simplices());
  for (int n = 0; n <= a.max_dimension(); ++n) CHECK(a.simplices(n) == b.simplices(n));
}

TEST_CASE("boundary matrices of a triangle match the signed incidence golden") {
  SimplicialComplex k = SimplicialComplex::build({{0, 1, 2}});
  Eigen::MatrixXi d1 = pll::boundary_matrix_int(k, 1);
  Eigen::MatrixXi expected1(3, 3);
  // rows [0],[1],[2]; columns [0,1],[0,2],[1,2]
  expected1 << -1, -1, 0, 1, 0, -1, 0, 1, 1;
  CHECK(d1 == expected1);

  Eigen::MatrixXi d2 = pll::boundary_matrix_int(k, 2);
  Eigen::MatrixXi expected2(3, 1);
  // d[0,1,2] = [1,2] - [0,2] + [0,1]
  expected2 << 1, -1, 1;
  CHECK(d2 == expected2);

  CHECK(pll::boundary_matrix_int(k, 0).rows() == 0);
  CHECK(pll::boundary_matrix_int(k, 0).cols() == 3);
  CHECK_THROWS_AS(pll::boundary_matrix_int(k, 5), pll::DimensionOutOfRange);
}

TEST_CASE("boundary composition vanishes exactly on random complexes") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex k = random_vr(rng, 8, 0.5);
    for (int n = 1; n < k.max_dimension(); ++n) {
      Eigen::MatrixXi prod = pll::boundary_matrix_int(k, n) * pll::boundary_matrix_int(k, n + 1);
      CHECK((prod.size() == 0 || prod.cwiseAbs().maxCoeff() == 0));
    }
  }
}

TEST_CASE("combinatorial Laplacian of a lone vertex and of an edge") {
  SimplicialComplex point = SimplicialComplex::build({{0}});
  CHECK(pll::combinatorial_laplacian(point, 0).isZero());

  SimplicialComplex edge = SimplicialComplex::build({{0, 1}});
  Matrix l0 = pll::combinatorial_laplacian(edge, 0);
  Matrix expected(2, 2);
  expected << 1, -1, -1, 1;
  CHECK((l0 - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("Betti numbers of standard spaces") {
  // Circle: boundary of a triangle.
  SimplicialComplex circle = SimplicialComplex::build({{0, 1}, {0, 2}, {1, 2}});
  CHECK(pll::betti_numbers(circle, 1) == std::vector<int>{1, 1});

  // Disk: filled triangle.
  SimplicialComplex disk = SimplicialComplex::build({{0, 1, 2}});
  CHECK(pll::betti_numbers(disk, 2) == std::vector<int>{1, 0, 0});

  // Sphere: boundary of the 3-simplex.
  SimplicialComplex sphere = SimplicialComplex::build(
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(pll::betti_numbers(sphere, 2) == std::vector<int>{1, 0, 1});

  // Two components.
  SimplicialComplex two = SimplicialComplex::build({{0, 1}, {2, 3}});
  CHECK(pll::betti_numbers(two, 1) == std::vector<int>{2, 0});
}

TEST_CASE("reduced Betti numbers shift the component count") {
  SimplicialComplex two = SimplicialComplex::build({{0}, {1}});
  pll::ReducedBetti rb = pll::reduced_betti_numbers(two, 1);
  CHECK_FALSE(rb.empty_complex);
  CHECK(rb.betti == std::vector<int>{1, 0});

  pll::ReducedBetti empty = pll::reduced_betti_numbers(SimplicialComplex{}, 1);
  CHECK(empty.empty_complex);
  CHECK(empty.betti == std::vector<int>{0, 0});
}

TEST_CASE("Laplacian kernels match Betti numbers on random complexes") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex k = random_vr(rng, 7, 0.45);
    if (k.empty()) continue;
    const int top = std::min(2, k.max_dimension());
    std::vector<int> betti = pll::betti_numbers(k, top);
    for (int n = 0; n <= top; ++n) {
      if (k.size(n) == 0) continue;
      pll::Spectrum s = pll::symmetric_eigenvalues(pll::combinatorial_laplacian(k, n));
      CHECK(static_cast<int>(s.zero_multiplicity) == betti[n]);
      CHECK(s.eigenvalues.front() >= -1e-8);
    }
  }
}

TEST_CASE("vertex_degree counts 1-skeleton incidences") {
  SimplicialComplex k = SimplicialComplex::build({{0, 1, 2}, {0, 3}});
  CHECK(k.vertex_degree(0) == 3);
  CHECK(k.vertex_degree(3) == 1);
}
