#pragma once

#include "pll/persist.hpp"

namespace pll {

struct InvalidPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateEdge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite point set, given either by coordinates (Euclidean metric) or by
/// a precomputed symmetric distance matrix.
class PointCloud {
 public:
  static PointCloud from_points(std::vector<Vector> points);
  static PointCloud from_distance_matrix(Matrix distances);

  std::size_t size() const { return static_cast<std::size_t>(dist_.rows()); }
  double distance(int a, int b) const { return dist_(a, b); }
  const Matrix& distance_matrix() const { return dist_; }

 private:
  Matrix dist_;
};

struct WeightedGraph {
  struct Edge {
    int u;
    int v;
    double w;
  };
  std::vector<int> vertices;  // ascending, unique
  std::vector<Edge> edges;    // u < v, no duplicates, no self-loops

  void add_vertex(int v);
  void add_edge(int u, int v, double w);
  bool has_vertex(int v) const;

  /// Neighbors of v through edges of weight <= r, ascending.
  std::vector<int> neighbors(int v, double r) const;
};

constexpr int kDefaultMaxDim = 3;

/// All simplices up to max_dim whose vertex sets have diameter <= r.
SimplicialComplex vietoris_rips(const PointCloud& x, double r, int max_dim = kDefaultMaxDim);

Filtration vr_filtration(const PointCloud& x, const std::vector<double>& scales,
                         int max_dim = kDefaultMaxDim);

/// Clique complex of the threshold graph G_r (edges of weight <= r); every
/// vertex of g is always present.
SimplicialComplex clique_complex(const WeightedGraph& g, double r, int max_dim = kDefaultMaxDim);

Filtration clique_filtration(const WeightedGraph& g, const std::vector<double>& scales,
                             int max_dim = kDefaultMaxDim);

/// Step i is VR(N_i(v), r_i) with N_i(v) = { u != v : d(u,v) <= r_i };
/// equals the link filtration of v inside vr_filtration.
Filtration neighborhood_link_filtration(const PointCloud& x, int v,
                                        const std::vector<double>& scales,
                                        int max_dim = kDefaultMaxDim);

/// Clique complex of the induced neighbor subgraph G_r[N_r(v)]; equals the
/// link of v in Clq(G_r).
SimplicialComplex graph_link_view(const WeightedGraph& g, int v, double r,
                                  int max_dim = kDefaultMaxDim);

/// Per-vertex link filtration for a graph: step i is Clq(G_{r_i}[N_{r_i}(v)]).
Filtration graph_link_filtration(const WeightedGraph& g, int v,
                                 const std::vector<double>& scales,
                                 int max_dim = kDefaultMaxDim);

/// Closed form for the dimension-1 local Laplacian: the graph Laplacian of
/// the induced subgraph G_r[N_r(v)].
Matrix local_laplacian_dim1_graph(const WeightedGraph& g, int v, double r);

/// B_in (I - B_out^T (B_out B_out^T)^+ B_out) B_in^T for the threshold
/// graph G_r of g with incidence rows split by inner_vertices (in the given
/// order) versus the rest.
Matrix persistent_laplacian_dim1_graph_closed_form(const WeightedGraph& g,
                                                   const std::vector<int>& inner_vertices,
                                                   double r, const Tolerance& tol = {});

}  // namespace pll
