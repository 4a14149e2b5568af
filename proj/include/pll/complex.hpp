#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "pll/numerics.hpp"

namespace pll {

/// Strictly ascending, non-empty list of vertex ids.
using Simplex = std::vector<int>;

struct InvalidSimplex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownVertex : std::runtime_error {
  explicit UnknownVertex(int v)
      : std::runtime_error("vertex " + std::to_string(v) + " is not in the complex") {}
};

/// Face-closed simplicial complex with a canonical basis: within each
/// dimension the simplices are ordered lexicographically on vertex lists.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Computes the face closure of the input set. Throws InvalidSimplex on
  /// unsorted or duplicate vertex ids.
  static SimplicialComplex build(const std::vector<Simplex>& simplices);

  /// -1 for the empty complex.
  int max_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  bool empty() const { return by_dim_.empty(); }

  const std::vector<Simplex>& simplices(int n) const;

  /// Number of n-simplices (0 when n is out of range).
  std::size_t size(int n) const;

  /// Basis index of a simplex within its dimension, or -1 if absent.
  int index_of(const Simplex& s) const;

  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  bool has_vertex(int v) const { return contains(Simplex{v}); }

  std::vector<int> vertices() const;

  /// Number of edges incident to v in the 1-skeleton.
  int vertex_degree(int v) const;

  std::vector<Simplex> all_simplices() const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> index_;

  static const std::vector<Simplex> kEmpty;
};

/// Signed incidence matrix of d_n in the canonical bases: rows are
/// (n-1)-simplices, columns n-simplices, entry (-1)^i when the row simplex
/// is the i-th face of the column simplex. n=0 gives a 0-row matrix.
Eigen::MatrixXi boundary_matrix_int(const SimplicialComplex& k, int n);

Matrix boundary_matrix(const SimplicialComplex& k, int n);

/// d_{n+1} d_{n+1}^T + d_n^T d_n on the n-simplex basis.
Matrix combinatorial_laplacian(const SimplicialComplex& k, int n);

/// beta_0..beta_{up_to} via exact integer rank-nullity.
std::vector<int> betti_numbers(const SimplicialComplex& k, int up_to);

struct ReducedBetti {
  std::vector<int> betti;  // reduced Betti numbers 0..up_to
  bool empty_complex = false;  // set for the empty complex (reduced beta_{-1} = 1)
};

ReducedBetti reduced_betti_numbers(const SimplicialComplex& k, int up_to);

}  // namespace pll
