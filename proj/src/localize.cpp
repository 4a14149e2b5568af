#include "pll/localize.hpp"

#include <algorithm>

namespace pll {

namespace {

void require_vertex(const SimplicialComplex& k, int v) {
  if (!k.has_vertex(v)) throw UnknownVertex(v);
}

Simplex with_vertex(const Simplex& s, int v) {
  Simplex out = s;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, int v) {
  require_vertex(k, v);
  std::vector<Simplex> members;
  for (int n = 0; n <= k.max_dimension(); ++n) {
    for (const Simplex& s : k.simplices(n)) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      if (k.contains(with_vertex(s, v))) members.push_back(s);
    }
  }
  return SimplicialComplex::build(members);
}

SimplicialComplex deleted_subcomplex(const SimplicialComplex& k, int v) {
  require_vertex(k, v);
  std::vector<Simplex> members;
  for (int n = 0; n <= k.max_dimension(); ++n) {
    for (const Simplex& s : k.simplices(n)) {
      if (!std::binary_search(s.begin(), s.end(), v)) members.push_back(s);
    }
  }
  return SimplicialComplex::build(members);
}

LocalView local_view(const SimplicialComplex& k, int v) {
  require_vertex(k, v);
  LocalView view;
  view.vertex = v;
  view.link = link(k, v);
  view.cofaces.resize(view.link.max_dimension() + 2);
  view.cofaces[0] = {Simplex{v}};
  for (int n = 0; n <= view.link.max_dimension(); ++n) {
    for (const Simplex& s : view.link.simplices(n)) {
      view.cofaces[n + 1].push_back(with_vertex(s, v));
    }
  }
  return view;
}

Matrix local_laplacian(const SimplicialComplex& k, int v, int n) {
  require_vertex(k, v);
  if (n < 0) throw DimensionOutOfRange("local_laplacian: negative dimension");
  if (n == 0) {
    Matrix m(1, 1);
    m(0, 0) = static_cast<double>(k.vertex_degree(v));
    return m;
  }
  SimplicialComplex lk = link(k, v);
  if (n - 1 > lk.max_dimension() || lk.size(n - 1) == 0) {
    return Matrix::Zero(0, 0);
  }
  return combinatorial_laplacian(lk, n - 1);
}

std::vector<int> local_betti(const SimplicialComplex& k, int v, int up_to) {
  require_vertex(k, v);
  SimplicialComplex lk = link(k, v);
  std::vector<int> out(up_to + 1, 0);
  if (lk.empty()) {
    if (up_to >= 0) out[0] = 1;  // reduced beta_{-1} of the empty link
    return out;
  }
  ReducedBetti rb = reduced_betti_numbers(lk, std::max(up_to - 1, 0));
  for (int n = 1; n <= up_to; ++n) out[n] = rb.betti[n - 1];
  return out;
}

}  // namespace pll
