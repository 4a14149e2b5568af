#pragma once

#include "pll/complex.hpp"

namespace pll {

/// Per-vertex view of a complex: the link of v plus the cofaces of v,
/// ordered to mirror the link's canonical basis through sigma -> sigma\{v}.
struct LocalView {
  int vertex = -1;
  SimplicialComplex link;
  // cofaces[n] lists the n-simplices containing v; for n >= 1 entry k is
  // {v} union link.simplices(n-1)[k], so the coface basis order is the one
  // induced from the link basis.
  std::vector<std::vector<Simplex>> cofaces;
};

LocalView local_view(const SimplicialComplex& k, int v);

/// Lk_K(v) = { sigma in K : v not in sigma, sigma union {v} in K }.
SimplicialComplex link(const SimplicialComplex& k, int v);

/// { sigma in K : v not in sigma }.
SimplicialComplex deleted_subcomplex(const SimplicialComplex& k, int v);

/// Local Laplacian on the coface basis of C_n(K, K\{v}). For n >= 1 this
/// is the (n-1)-Laplacian of the link (identical matrix under the signed
/// basis identification); for n = 0 it is the 1x1 matrix [deg v]. Returns
/// a 0x0 matrix when the relevant chain space is trivial.
Matrix local_laplacian(const SimplicialComplex& k, int v, int n);

/// Local Betti numbers H_n(K, K\{v}) via reduced Betti of the link shifted
/// by one; entry 0 is 1 iff the link is empty.
std::vector<int> local_betti(const SimplicialComplex& k, int v, int up_to);

}  // namespace pll
