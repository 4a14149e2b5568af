#include "pll/persist.hpp"

#include <algorithm>

#include "pll/exact.hpp"

namespace pll {

ChainComplex chain_complex(const SimplicialComplex& k) {
  ChainComplex c;
  for (int n = 0; n <= k.max_dimension(); ++n) {
    c.d.push_back(boundary_matrix(k, n));
  }
  return c;
}

Matrix chain_laplacian(const ChainComplex& c, int n) {
  const Eigen::Index sz = c.dim(n);
  Matrix lap = Matrix::Zero(sz, sz);
  Matrix dn = c.boundary(n);
  lap += dn.transpose() * dn;
  Matrix dnp1 = c.boundary(n + 1);
  lap += dnp1 * dnp1.transpose();
  return lap;
}

double DGMorphism::chain_map_defect() const {
  double worst = 0.0;
  const int top = std::max(static_cast<int>(source.d.size()), static_cast<int>(target.d.size()));
  for (int n = 0; n <= top; ++n) {
    Matrix lhs = target.boundary(n) * map(n);
    Matrix rhs = map(n - 1) * source.boundary(n);
    if (lhs.size() > 0) worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

DGMorphism inclusion_morphism(const SimplicialComplex& sub, const SimplicialComplex& super) {
  DGMorphism f;
  f.source = chain_complex(sub);
  f.target = chain_complex(super);
  for (int n = 0; n <= sub.max_dimension(); ++n) {
    Matrix m = Matrix::Zero(super.size(n), sub.size(n));
    const auto& cols = sub.simplices(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const int row = super.index_of(cols[j]);
      if (row < 0) throw InvalidSimplex("inclusion_morphism: sub is not a subcomplex");
      m(row, j) = 1.0;
    }
    f.maps.push_back(std::move(m));
  }
  return f;
}

namespace {

// Sorts the vertex image; returns 0 on repeats, else the permutation sign.
int image_simplex(const Simplex& s, const std::map<int, int>& vm, Simplex& out) {
  out.clear();
  for (int v : s) {
    auto it = vm.find(v);
    if (it == vm.end()) throw UnknownVertex(v);
    out.push_back(it->second);
  }
  int sign = 1;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    for (std::size_t j = 0; j + 1 < out.size() - i; ++j) {
      if (out[j] == out[j + 1]) return 0;
      if (out[j] > out[j + 1]) {
        std::swap(out[j], out[j + 1]);
        sign = -sign;
      }
    }
  }
  if (out.size() >= 2 && out[out.size() - 2] == out.back()) return 0;
  return sign;
}

}  // namespace

DGMorphism simplicial_map_morphism(const SimplicialComplex& src, const SimplicialComplex& dst,
                                   const std::map<int, int>& vertex_map) {
  DGMorphism f;
  f.source = chain_complex(src);
  f.target = chain_complex(dst);
  for (int n = 0; n <= src.max_dimension(); ++n) {
    Matrix m = Matrix::Zero(dst.size(n), src.size(n));
    const auto& cols = src.simplices(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Simplex img;
      const int sign = image_simplex(cols[j], vertex_map, img);
      if (sign == 0) continue;
      const int row = dst.index_of(img);
      if (row < 0) throw InvalidSimplex("simplicial_map_morphism: image simplex missing");
      m(row, j) = static_cast<double>(sign);
    }
    f.maps.push_back(std::move(m));
  }
  return f;
}

ChainComplex relative_local_chain_complex(const SimplicialComplex& k, int v) {
  LocalView view = local_view(k, v);
  ChainComplex c;
  // Degree 0 is dropped: the quotient class [v] is conjugated away by the
  // link identification, so d_1 has zero rows and the complex matches the
  // shifted link complex matrix-for-matrix.
  c.d.push_back(Matrix::Zero(0, 0));
  for (std::size_t n = 1; n < view.cofaces.size(); ++n) {
    const std::size_t nrows = n == 1 ? 0 : view.cofaces[n - 1].size();
    Matrix d = Matrix::Zero(nrows, view.cofaces[n].size());
    if (n > 1) {
      std::map<Simplex, int> row_index;
      for (std::size_t r = 0; r < view.cofaces[n - 1].size(); ++r) {
        row_index[view.cofaces[n - 1][r]] = static_cast<int>(r);
      }
      for (std::size_t j = 0; j < view.cofaces[n].size(); ++j) {
        const Simplex& s = view.cofaces[n][j];
        // Orient each coface with v in front, so the signs are those of the
        // boundary of s \ {v} and the matrices match the link route exactly.
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] == v) continue;  // faces losing v are projected away
          Simplex face = s;
          face.erase(face.begin() + i);
          d(row_index.at(face), j) = static_cast<double>(sign);
          sign = -sign;
        }
      }
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

DGMorphism relative_local_inclusion(const SimplicialComplex& ki, const SimplicialComplex& kj,
                                    int v) {
  LocalView view_i = local_view(ki, v);
  LocalView view_j = local_view(kj, v);
  DGMorphism f;
  f.source = relative_local_chain_complex(ki, v);
  f.target = relative_local_chain_complex(kj, v);
  f.maps.push_back(Matrix::Zero(0, 0));
  for (std::size_t n = 1; n < view_i.cofaces.size(); ++n) {
    const auto& tgt = n < view_j.cofaces.size() ? view_j.cofaces[n] : std::vector<Simplex>{};
    Matrix m = Matrix::Zero(tgt.size(), view_i.cofaces[n].size());
    for (std::size_t j = 0; j < view_i.cofaces[n].size(); ++j) {
      auto it = std::find(tgt.begin(), tgt.end(), view_i.cofaces[n][j]);
      if (it == tgt.end()) throw InvalidSimplex("relative_local_inclusion: not nested");
      m(it - tgt.begin(), j) = 1.0;
    }
    f.maps.push_back(std::move(m));
  }
  return f;
}

Filtration::Filtration(std::vector<SimplicialComplex> steps, std::vector<double> scales)
    : steps_(std::move(steps)), scales_(std::move(scales)) {
  if (steps_.size() != scales_.size() || steps_.empty()) {
    throw NonMonotoneScales("filtration needs one scale per step (and at least one step)");
  }
  for (std::size_t i = 1; i < scales_.size(); ++i) {
    if (!(scales_[i - 1] < scales_[i])) {
      throw NonMonotoneScales("scales must be strictly ascending");
    }
  }
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    for (const Simplex& s : steps_[i - 1].all_simplices()) {
      if (!steps_[i].contains(s)) {
        throw NonMonotoneScales("filtration steps are not nested");
      }
    }
  }
}

const SimplicialComplex& Filtration::step(int i) const {
  if (i < 0 || i >= num_steps()) throw IndexOutOfRange("filtration step " + std::to_string(i));
  return steps_[i];
}

double Filtration::scale(int i) const {
  if (i < 0 || i >= num_steps()) throw IndexOutOfRange("filtration step " + std::to_string(i));
  return scales_[i];
}

int birth_index(const Filtration& filt, int v) {
  for (int i = 0; i < filt.num_steps(); ++i) {
    if (filt.step(i).has_vertex(v)) return i;
  }
  return -1;
}

PersistentVertex persistent_vertex(const Filtration& filt, int v) {
  const int b = birth_index(filt, v);
  if (b < 0) throw UnknownVertex(v);
  return PersistentVertex{v, b};
}

Matrix persistence_domain(const DGMorphism& f, int n, const Tolerance& tol) {
  Matrix fm = f.map(n - 1);
  Matrix dw = f.target.boundary(n);
  Matrix proj_off_im =
      Matrix::Identity(fm.rows(), fm.rows()) - fm * pseudoinverse(fm, tol);
  return orthonormal_kernel_basis(proj_off_im * dw, tol);
}

Matrix pullback_differential(const DGMorphism& f, int n, const Matrix& theta,
                             const Tolerance& tol) {
  return pseudoinverse(f.map(n - 1), tol) * f.target.boundary(n) * theta;
}

Matrix generalized_persistent_laplacian(const DGMorphism& f, int n, const Tolerance& tol) {
  const Eigen::Index sz = f.source.dim(n);
  Matrix theta = persistence_domain(f, n + 1, tol);
  Matrix delta = pullback_differential(f, n + 1, theta, tol);
  Matrix dv = f.source.boundary(n);
  Matrix fn = f.map(n);
  Matrix lap = delta * delta.transpose() + dv.transpose() * dv +
               (Matrix::Identity(sz, sz) - pseudoinverse(fn, tol) * fn);
  return 0.5 * (lap + lap.transpose());
}

namespace {

void check_query(const Filtration& filt, const PersistentVertex& pv, int i, int j) {
  if (i < 0 || j >= filt.num_steps() || i > j) {
    throw IndexOutOfRange("persistent query (i,j) = (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  }
  if (i < pv.birth) throw VertexNotBorn(pv.v, i);
}

}  // namespace

Matrix persistent_local_laplacian(const Filtration& filt, const PersistentVertex& pv, int n,
                                  int i, int j, const Tolerance& tol) {
  check_query(filt, pv, i, j);
  if (n < 1) throw DimensionOutOfRange("persistent_local_laplacian requires n >= 1");
  SimplicialComplex lk_i = link(filt.step(i), pv.v);
  SimplicialComplex lk_j = link(filt.step(j), pv.v);
  DGMorphism f = inclusion_morphism(lk_i, lk_j);
  return generalized_persistent_laplacian(f, n - 1, tol);
}

Matrix persistent_local_laplacian_relative(const Filtration& filt, const PersistentVertex& pv,
                                           int n, int i, int j, const Tolerance& tol) {
  check_query(filt, pv, i, j);
  DGMorphism f = relative_local_inclusion(filt.step(i), filt.step(j), pv.v);
  return generalized_persistent_laplacian(f, n, tol);
}

Matrix persistent_local_laplacian_dim0(const Filtration& filt, const PersistentVertex& pv,
                                       int i, int j) {
  check_query(filt, pv, i, j);
  Matrix m(1, 1);
  m(0, 0) = static_cast<double>(filt.step(j).vertex_degree(pv.v));
  return m;
}

int persistent_betti_oracle(const DGMorphism& f, int n, const Tolerance& tol) {
  const int vn = static_cast<int>(f.source.dim(n));
  if (vn == 0) return 0;
  Matrix dv = f.source.boundary(n);
  Matrix bj = f.target.boundary(n + 1);
  Matrix fn = f.map(n);
  if (is_integral(dv) && is_integral(bj) && is_integral(fn)) {
    RationalMatrix z = exact_nullspace(to_rational(dv), vn);
    RationalMatrix fz = rmul(to_rational(fn), z);
    RationalMatrix b = to_rational(bj);
    if (b.empty()) b.assign(fn.rows(), std::vector<Rational>{});
    return exact_rank(hconcat(fz, b)) - exact_rank(b);
  }
  Matrix z = orthonormal_kernel_basis(dv, tol);
  if (z.cols() == 0) return 0;
  Matrix fz = fn * z;
  Matrix joint(fz.rows(), fz.cols() + bj.cols());
  joint.leftCols(fz.cols()) = fz;
  joint.rightCols(bj.cols()) = bj;
  return static_cast<int>(rank(joint, tol) - rank(bj, tol));
}

int persistent_local_betti(const Filtration& filt, const PersistentVertex& pv, int n, int i,
                           int j, const Tolerance& tol) {
  check_query(filt, pv, i, j);
  if (n < 0) throw DimensionOutOfRange("persistent_local_betti: negative dimension");
  if (n == 0) {
    return filt.step(j).vertex_degree(pv.v) == 0 ? 1 : 0;
  }
  SimplicialComplex lk_i = link(filt.step(i), pv.v);
  SimplicialComplex lk_j = link(filt.step(j), pv.v);
  DGMorphism f = inclusion_morphism(lk_i, lk_j);
  return persistent_betti_oracle(f, n - 1, tol);
}

}  // namespace pll
