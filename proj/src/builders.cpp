#include "pll/builders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace pll {

PointCloud PointCloud::from_points(std::vector<Vector> points) {
  PointCloud pc;
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  pc.dist_ = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (points[i].size() != points[j].size()) {
        throw std::invalid_argument("points must share an ambient dimension");
      }
      pc.dist_(i, j) = pc.dist_(j, i) = (points[i] - points[j]).norm();
    }
  }
  return pc;
}

PointCloud PointCloud::from_distance_matrix(Matrix distances) {
  if (distances.rows() != distances.cols()) {
    throw std::invalid_argument("distance matrix must be square");
  }
  for (Eigen::Index i = 0; i < distances.rows(); ++i) {
    if (distances(i, i) != 0.0) {
      throw std::invalid_argument("distance matrix must have a zero diagonal");
    }
    for (Eigen::Index j = 0; j < distances.cols(); ++j) {
      if (distances(i, j) < 0.0 || distances(i, j) != distances(j, i)) {
        throw std::invalid_argument("distance matrix must be symmetric and non-negative");
      }
    }
  }
  PointCloud pc;
  pc.dist_ = std::move(distances);
  return pc;
}

void WeightedGraph::add_vertex(int v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) vertices.insert(it, v);
}

void WeightedGraph::add_edge(int u, int v, double w) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u > v) std::swap(u, v);
  for (const Edge& e : edges) {
    if (e.u == u && e.v == v) throw DuplicateEdge("duplicate edge");
  }
  add_vertex(u);
  add_vertex(v);
  edges.push_back({u, v, w});
}

bool WeightedGraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<int> WeightedGraph::neighbors(int v, double r) const {
  std::vector<int> out;
  for (const Edge& e : edges) {
    if (e.w > r) continue;
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Emits all cliques of an adjacency relation with up to max_vertices
// vertices, in lexicographic order of vertex lists.
std::vector<Simplex> enumerate_cliques(const std::vector<int>& verts,
                                       const std::function<bool(int, int)>& adjacent,
                                       int max_vertices) {
  std::vector<Simplex> out;
  Simplex current;
  std::function<void(std::size_t)> expand = [&](std::size_t start) {
    for (std::size_t i = start; i < verts.size(); ++i) {
      const int cand = verts[i];
      bool ok = true;
      for (int u : current) {
        if (!adjacent(u, cand)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(cand);
      out.push_back(current);
      if (static_cast<int>(current.size()) < max_vertices) expand(i + 1);
      current.pop_back();
    }
  };
  expand(0);
  return out;
}

SimplicialComplex rips_on(const PointCloud& x, const std::vector<int>& verts, double r,
                          int max_dim) {
  auto adjacent = [&](int a, int b) { return x.distance(a, b) <= r; };
  return SimplicialComplex::build(enumerate_cliques(verts, adjacent, max_dim + 1));
}

}  // namespace

SimplicialComplex vietoris_rips(const PointCloud& x, double r, int max_dim) {
  std::vector<int> verts(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) verts[i] = static_cast<int>(i);
  return rips_on(x, verts, r, max_dim);
}

Filtration vr_filtration(const PointCloud& x, const std::vector<double>& scales, int max_dim) {
  if (scales.empty()) throw NonMonotoneScales("vr_filtration: empty scale list");
  std::vector<SimplicialComplex> steps;
  for (double r : scales) steps.push_back(vietoris_rips(x, r, max_dim));
  return Filtration(std::move(steps), scales);
}

SimplicialComplex clique_complex(const WeightedGraph& g, double r, int max_dim) {
  auto adjacent = [&](int a, int b) {
    for (const WeightedGraph::Edge& e : g.edges) {
      if (e.w <= r && ((e.u == a && e.v == b) || (e.u == b && e.v == a))) return true;
    }
    return false;
  };
  return SimplicialComplex::build(enumerate_cliques(g.vertices, adjacent, max_dim + 1));
}

Filtration clique_filtration(const WeightedGraph& g, const std::vector<double>& scales,
                             int max_dim) {
  if (scales.empty()) throw NonMonotoneScales("clique_filtration: empty scale list");
  std::vector<SimplicialComplex> steps;
  for (double r : scales) steps.push_back(clique_complex(g, r, max_dim));
  return Filtration(std::move(steps), scales);
}

Filtration neighborhood_link_filtration(const PointCloud& x, int v,
                                        const std::vector<double>& scales, int max_dim) {
  if (v < 0 || static_cast<std::size_t>(v) >= x.size()) throw UnknownVertex(v);
  if (scales.empty()) throw NonMonotoneScales("neighborhood_link_filtration: empty scale list");
  std::vector<SimplicialComplex> steps;
  for (double r : scales) {
    std::vector<int> nbrs;
    for (std::size_t u = 0; u < x.size(); ++u) {
      if (static_cast<int>(u) != v && x.distance(static_cast<int>(u), v) <= r) {
        nbrs.push_back(static_cast<int>(u));
      }
    }
    // Cap at max_dim - 1: a link simplex of dimension n comes from a
    // (n + 1)-simplex of the ambient complex, which is capped at max_dim.
    steps.push_back(rips_on(x, nbrs, r, max_dim - 1));
  }
  return Filtration(std::move(steps), scales);
}

SimplicialComplex graph_link_view(const WeightedGraph& g, int v, double r, int max_dim) {
  if (!g.has_vertex(v)) throw UnknownVertex(v);
  std::vector<int> nbrs = g.neighbors(v, r);
  auto adjacent = [&](int a, int b) {
    for (const WeightedGraph::Edge& e : g.edges) {
      if (e.w <= r && ((e.u == a && e.v == b) || (e.u == b && e.v == a))) return true;
    }
    return false;
  };
  // Cliques of up to max_dim vertices: link simplices of the ambient
  // clique complex, which itself is capped at dimension max_dim.
  return SimplicialComplex::build(enumerate_cliques(nbrs, adjacent, max_dim));
}

Filtration graph_link_filtration(const WeightedGraph& g, int v,
                                 const std::vector<double>& scales, int max_dim) {
  if (scales.empty()) throw NonMonotoneScales("graph_link_filtration: empty scale list");
  std::vector<SimplicialComplex> steps;
  for (double r : scales) steps.push_back(graph_link_view(g, v, r, max_dim));
  return Filtration(std::move(steps), scales);
}

Matrix local_laplacian_dim1_graph(const WeightedGraph& g, int v, double r) {
  if (!g.has_vertex(v)) throw UnknownVertex(v);
  std::vector<int> nbrs = g.neighbors(v, r);
  const Eigen::Index d = static_cast<Eigen::Index>(nbrs.size());
  Matrix lap = Matrix::Zero(d, d);
  for (const WeightedGraph::Edge& e : g.edges) {
    if (e.w > r) continue;
    auto pu = std::find(nbrs.begin(), nbrs.end(), e.u);
    auto pv = std::find(nbrs.begin(), nbrs.end(), e.v);
    if (pu == nbrs.end() || pv == nbrs.end()) continue;
    const Eigen::Index a = pu - nbrs.begin();
    const Eigen::Index b = pv - nbrs.begin();
    lap(a, b) = lap(b, a) = -1.0;
    lap(a, a) += 1.0;
    lap(b, b) += 1.0;
  }
  return lap;
}

Matrix persistent_laplacian_dim1_graph_closed_form(const WeightedGraph& g,
                                                   const std::vector<int>& inner_vertices,
                                                   double r, const Tolerance& tol) {
  std::set<int> inner(inner_vertices.begin(), inner_vertices.end());
  if (inner.size() != inner_vertices.size()) {
    throw InvalidPartition("inner vertex list has duplicates");
  }
  for (int v : inner_vertices) {
    if (!g.has_vertex(v)) throw InvalidPartition("inner vertex not in graph");
  }
  std::vector<int> outer;
  for (int v : g.vertices) {
    if (!inner.count(v)) outer.push_back(v);
  }

  std::vector<WeightedGraph::Edge> active;
  for (const WeightedGraph::Edge& e : g.edges) {
    if (e.w <= r) active.push_back(e);
  }
  std::sort(active.begin(), active.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  auto incidence_rows = [&](const std::vector<int>& rows) {
    Matrix m = Matrix::Zero(rows.size(), active.size());
    for (std::size_t j = 0; j < active.size(); ++j) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (active[j].u == rows[i]) m(i, j) = -1.0;  // d[u,v] = [v] - [u]
        if (active[j].v == rows[i]) m(i, j) = 1.0;
      }
    }
    return m;
  };

  Matrix b_in = incidence_rows(inner_vertices);
  Matrix b_out = incidence_rows(outer);
  Matrix p_theta =
      Matrix::Identity(active.size(), active.size()) -
      b_out.transpose() * pseudoinverse(b_out * b_out.transpose(), tol) * b_out;
  Matrix lap = b_in * p_theta * b_in.transpose();
  return 0.5 * (lap + lap.transpose());
}

}  // namespace pll
