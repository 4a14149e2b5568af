#pragma once

#include <map>

#include "pll/localize.hpp"
#include "pll/numerics.hpp"

namespace pll {

struct NonMonotoneScales : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VertexNotBorn : std::runtime_error {
  VertexNotBorn(int v, int i)
      : std::runtime_error("vertex " + std::to_string(v) + " is not born at step " +
                           std::to_string(i)) {}
};

/// Chain complex presented by its boundary matrices in fixed bases.
/// d[n] maps C_n -> C_{n-1}; d[0] has zero rows.
struct ChainComplex {
  std::vector<Matrix> d;

  Eigen::Index dim(int n) const {
    if (n < 0 || n >= static_cast<int>(d.size())) return 0;
    return d[n].cols();
  }
  Matrix boundary(int n) const {
    if (n >= 0 && n < static_cast<int>(d.size())) return d[n];
    return Matrix::Zero(dim(n - 1), dim(n));
  }
};

ChainComplex chain_complex(const SimplicialComplex& k);

/// Laplacian d_{n+1} d_{n+1}^T + d_n^T d_n of a presented chain complex.
Matrix chain_laplacian(const ChainComplex& c, int n);

/// Degree-zero chain map between two chain complexes; maps[n] takes
/// C_n(source) to C_n(target) and commutes with the boundaries.
struct DGMorphism {
  ChainComplex source;
  ChainComplex target;
  std::vector<Matrix> maps;

  Matrix map(int n) const {
    if (n >= 0 && n < static_cast<int>(maps.size())) return maps[n];
    return Matrix::Zero(target.dim(n), source.dim(n));
  }

  /// Max residual of the chain-map condition d_W F - F d_V over all degrees.
  double chain_map_defect() const;
};

/// 0/1 column-selection chain map induced by a subcomplex inclusion.
DGMorphism inclusion_morphism(const SimplicialComplex& sub, const SimplicialComplex& super);

/// Chain map of a simplicial map given by images of vertices. A simplex
/// whose image has repeated vertices maps to 0; otherwise to the sorted
/// image simplex with the permutation sign.
DGMorphism simplicial_map_morphism(const SimplicialComplex& src, const SimplicialComplex& dst,
                                   const std::map<int, int>& vertex_map);

/// Relative chain complex C_*(K, K\{v}) on the coface basis of v, with the
/// boundary obtained from d by projecting away non-coface rows. Degree 0 is
/// dropped (the class [v] is conjugated away by the link identification),
/// so the matrices coincide with the link complex shifted by one.
ChainComplex relative_local_chain_complex(const SimplicialComplex& k, int v);

/// Inclusion of relative local chain complexes for nested complexes.
DGMorphism relative_local_inclusion(const SimplicialComplex& ki, const SimplicialComplex& kj,
                                    int v);

/// Nested complexes indexed by ascending scales.
class Filtration {
 public:
  Filtration(std::vector<SimplicialComplex> steps, std::vector<double> scales);

  int num_steps() const { return static_cast<int>(steps_.size()); }
  const SimplicialComplex& step(int i) const;
  double scale(int i) const;

 private:
  std::vector<SimplicialComplex> steps_;
  std::vector<double> scales_;
};

struct PersistentVertex {
  int v = -1;
  int birth = -1;
};

/// Birth index of v in the filtration, or -1 if it never appears.
int birth_index(const Filtration& filt, int v);

PersistentVertex persistent_vertex(const Filtration& filt, int v);

/// Orthonormal columns spanning the persistence domain Theta at degree n:
/// { x in W_n : d_W x in im F_{n-1} }, computed as
/// ker((I - F F^+) d_W).
Matrix persistence_domain(const DGMorphism& f, int n, const Tolerance& tol = {});

/// F_{n-1}^+ d_W theta, mapping Theta-coordinates to C_{n-1}(source).
Matrix pullback_differential(const DGMorphism& f, int n, const Matrix& theta,
                             const Tolerance& tol = {});

/// delta delta^T + d_V^T d_V + (I - F^+ F), acting on C_n(source). The last
/// term vanishes for inclusions.
Matrix generalized_persistent_laplacian(const DGMorphism& f, int n, const Tolerance& tol = {});

/// (i,j)-persistent local Laplacian at dimension n >= 1, computed through
/// the persistent link complex at dimension n-1.
Matrix persistent_local_laplacian(const Filtration& filt, const PersistentVertex& pv, int n,
                                  int i, int j, const Tolerance& tol = {});

/// Same operator obtained directly on the relative chain complexes
/// (independent route used for cross-checks).
Matrix persistent_local_laplacian_relative(const Filtration& filt, const PersistentVertex& pv,
                                           int n, int i, int j, const Tolerance& tol = {});

/// Closed form for n = 0: the 1x1 matrix [number of neighbors of v in the
/// 1-skeleton at step j].
Matrix persistent_local_laplacian_dim0(const Filtration& filt, const PersistentVertex& pv,
                                       int i, int j);

/// dim im(H_n(source) -> H_n(target)) by rank computation:
/// rank([F Z | B_j]) - rank(B_j) with Z a kernel basis of d_n(source) and
/// B_j = d_{n+1}(target). Exact rational arithmetic for integral inputs.
int persistent_betti_oracle(const DGMorphism& f, int n, const Tolerance& tol = {});

/// (i,j)-persistent local Betti number of v at dimension n.
int persistent_local_betti(const Filtration& filt, const PersistentVertex& pv, int n, int i,
                           int j, const Tolerance& tol = {});

}  // namespace pll
