#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pll/builders.hpp"
#include "pll/exact.hpp"
#include "pll/localize.hpp"
#include "pll/persist.hpp"

using pll::Matrix;
using pll::Simplex;
using pll::SimplicialComplex;

namespace {

// Two triangles sharing the edge {v,b}: v=0, a=1, b=2, c=3.
SimplicialComplex two_triangles() {
  return SimplicialComplex::build({{0, 1, 2}, {0, 2, 3}});
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

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

TEST_CASE("link and deleted subcomplex of the two-triangle complex") {
  SimplicialComplex k = two_triangles();
  SimplicialComplex lk = pll::link(k, 0);
  CHECK(lk.all_simplices() ==
        std::vector<Simplex>{{1}, {2}, {3}, {1, 2}, {2, 3}});

  SimplicialComplex del = pll::deleted_subcomplex(k, 0);
  CHECK(del.all_simplices() ==
        std::vector<Simplex>{{1}, {2}, {3}, {1, 2}, {2, 3}});

  CHECK_THROWS_AS(pll::link(k, 9), pll::UnknownVertex);
}

TEST_CASE("local view mirrors the link basis order through the coface map") {
  pll::LocalView view = pll::local_view(two_triangles(), 0);
  REQUIRE(view.cofaces.size() == 3);
  CHECK(view.cofaces[0] == std::vector<Simplex>{{0}});
  CHECK(view.cofaces[1] == std::vector<Simplex>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(view.cofaces[2] == std::vector<Simplex>{{0, 1, 2}, {0, 2, 3}});
}

TEST_CASE("golden local Laplacians at the hub vertex") {
  SimplicialComplex k = two_triangles();

  Matrix l1 = pll::local_laplacian(k, 0, 1);
  Matrix expected1(3, 3);
  expected1 << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK(max_abs(l1 - expected1) == 0.0);

  Matrix l2 = pll::local_laplacian(k, 0, 2);
  Matrix expected2(2, 2);
  expected2 << 2, -1, -1, 2;
  CHECK(max_abs(l2 - expected2) == 0.0);
}

TEST_CASE("golden local Laplacians at a rim vertex") {
  SimplicialComplex k = two_triangles();

  Matrix l1 = pll::local_laplacian(k, 1, 1);
  Matrix expected1(2, 2);
  expected1 << 1, -1, -1, 1;
  CHECK(max_abs(l1 - expected1) == 0.0);

  Matrix l2 = pll::local_laplacian(k, 1, 2);
  REQUIRE(l2.rows() == 1);
  CHECK(l2(0, 0) == 2.0);
}

TEST_CASE("dimension-0 local Laplacian is the vertex degree") {
  SimplicialComplex k = two_triangles();
  for (int v : k.vertices()) {
    Matrix l0 = pll::local_laplacian(k, v, 0);
    REQUIRE(l0.rows() == 1);
    CHECK(l0(0, 0) == static_cast<double>(k.vertex_degree(v)));
  }
}

TEST_CASE("full simplex local Laplacian is nI - J at every vertex") {
  for (int n = 3; n <= 5; ++n) {
    Simplex full(n + 1);
    for (int i = 0; i <= n; ++i) full[i] = i;
    SimplicialComplex k = SimplicialComplex::build({full});
    Matrix expected = static_cast<double>(n) * Matrix::Identity(n, n) - Matrix::Ones(n, n);
    for (int v = 0; v <= n; ++v) {
      CHECK(max_abs(pll::local_laplacian(k, v, 1) - expected) == 0.0);
    }
  }
}

TEST_CASE("local Laplacian is the zero-sized operator above the coface range") {
  SimplicialComplex k = two_triangles();
  CHECK(pll::local_laplacian(k, 0, 3).size() == 0);
  CHECK(pll::local_laplacian(k, 3, 2).size() == 1);  // one coface triangle
}

TEST_CASE("relative chain route reproduces the link-route Laplacian matrices") {
  std::mt19937 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 15; ++trial) {
    SimplicialComplex k = random_vr(rng, 7, 0.5);
    if (k.empty()) continue;
    for (int v : k.vertices()) {
      pll::ChainComplex rel = pll::relative_local_chain_complex(k, v);
      for (int n = 1; n <= 3; ++n) {
        Matrix via_link = pll::local_laplacian(k, v, n);
        Matrix via_rel = pll::chain_laplacian(rel, n);
        if (via_link.size() == 0 && via_rel.size() == 0) continue;
        REQUIRE(via_link.rows() == via_rel.rows());
        CHECK(max_abs(via_link - via_rel) <= 1e-12);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("local Laplacian kernels match link Betti numbers") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    SimplicialComplex k = random_vr(rng, 7, 0.45);
    if (k.empty()) continue;
    for (int v : k.vertices()) {
      SimplicialComplex lk = pll::link(k, v);
      for (int n = 1; n <= 2; ++n) {
        if (lk.size(n - 1) == 0) continue;
        pll::Spectrum s = pll::symmetric_eigenvalues(pll::local_laplacian(k, v, n));
        CHECK(static_cast<int>(s.zero_multiplicity) ==
              pll::betti_numbers(lk, n - 1)[n - 1]);
      }
    }
  }
}

TEST_CASE("local Betti numbers follow the reduced-link convention") {
  // Interior vertex of a triangulated circle: link = two points.
  SimplicialComplex circle = SimplicialComplex::build({{0, 1}, {1, 2}, {0, 2}});
  std::vector<int> lb = pll::local_betti(circle, 0, 1);
  CHECK(lb == std::vector<int>{0, 1});

  // Hub of the two-triangle complex: link is a contractible path.
  CHECK(pll::local_betti(two_triangles(), 0, 2) == std::vector<int>{0, 0, 0});

  // Isolated vertex.
  SimplicialComplex iso = SimplicialComplex::build({{0}, {1, 2}});
  CHECK(pll::local_betti(iso, 0, 1) == std::vector<int>{1, 0});
}

namespace {

// Independent relative-homology oracle: quotient boundary matrices built by
// restricting the full complex's boundary matrices to coface rows/columns
// (including the degree-0 class [v]), with exact integer ranks.
std::vector<int> relative_betti_oracle(const SimplicialComplex& k, int v, int up_to) {
  std::vector<std::vector<int>> coface_cols(k.max_dimension() + 1);
  for (int n = 0; n <= k.max_dimension(); ++n) {
    const auto& basis = k.simplices(n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (std::binary_search(basis[j].begin(), basis[j].end(), v)) {
        coface_cols[n].push_back(static_cast<int>(j));
      }
    }
  }
  auto quotient_boundary = [&](int n) -> pll::RationalMatrix {
    if (n <= 0 || n > k.max_dimension()) return {};
    Eigen::MatrixXi d = pll::boundary_matrix_int(k, n);
    pll::RationalMatrix q(coface_cols[n - 1].size(),
                          std::vector<pll::Rational>(coface_cols[n].size()));
    for (std::size_t r = 0; r < coface_cols[n - 1].size(); ++r)
      for (std::size_t c = 0; c < coface_cols[n].size(); ++c)
        q[r][c] = pll::Rational(d(coface_cols[n - 1][r], coface_cols[n][c]));
    return q;
  };
  std::vector<int> betti;
  for (int n = 0; n <= up_to; ++n) {
    const int dim_n = n <= k.max_dimension() ? static_cast<int>(coface_cols[n].size()) : 0;
    betti.push_back(dim_n - pll::exact_rank(quotient_boundary(n)) -
                    pll::exact_rank(quotient_boundary(n + 1)));
  }
  return betti;
}

}  // namespace

TEST_CASE("local Betti matches rank-nullity homology of the relative pair") {
  std::mt19937 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 10; ++trial) {
    SimplicialComplex k = random_vr(rng, 7, 0.5);
    if (k.empty()) continue;
    for (int v : k.vertices()) {
      CHECK(pll::local_betti(k, v, 3) == relative_betti_oracle(k, v, 3));
      ++checked;
    }
  }
  CHECK(checked >= 50);
}
