#include "pll/complex.hpp"

#include <algorithm>
#include <set>

#include "pll/exact.hpp"

namespace pll {

const std::vector<Simplex> SimplicialComplex::kEmpty;

SimplicialComplex SimplicialComplex::build(const std::vector<Simplex>& simplices) {
  std::set<Simplex> closure;
  for (const Simplex& s : simplices) {
    if (s.empty()) throw InvalidSimplex("empty simplex");
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] <= s[i - 1]) {
        throw InvalidSimplex("vertex ids must be strictly ascending");
      }
    }
    if (s.front() < 0) throw InvalidSimplex("vertex ids must be non-negative");
    // enumerate all non-empty subsets as faces
    const std::size_t nsub = std::size_t{1} << s.size();
    for (std::size_t mask = 1; mask < nsub; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
      }
      closure.insert(std::move(face));
    }
  }

  SimplicialComplex k;
  for (const Simplex& s : closure) {
    const int n = static_cast<int>(s.size()) - 1;
    if (n >= static_cast<int>(k.by_dim_.size())) {
      k.by_dim_.resize(n + 1);
      k.index_.resize(n + 1);
    }
    k.by_dim_[n].push_back(s);
  }
  for (std::size_t n = 0; n < k.by_dim_.size(); ++n) {
    std::sort(k.by_dim_[n].begin(), k.by_dim_[n].end());
    for (std::size_t i = 0; i < k.by_dim_[n].size(); ++i) {
      k.index_[n][k.by_dim_[n][i]] = static_cast<int>(i);
    }
  }
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int n) const {
  if (n < 0 || n > max_dimension()) return kEmpty;
  return by_dim_[n];
}

std::size_t SimplicialComplex::size(int n) const { return simplices(n).size(); }

int SimplicialComplex::index_of(const Simplex& s) const {
  const int n = static_cast<int>(s.size()) - 1;
  if (n < 0 || n > max_dimension()) return -1;
  auto it = index_[n].find(s);
  return it == index_[n].end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> vs;
  for (const Simplex& s : simplices(0)) vs.push_back(s[0]);
  return vs;
}

int SimplicialComplex::vertex_degree(int v) const {
  int deg = 0;
  for (const Simplex& e : simplices(1)) {
    if (e[0] == v || e[1] == v) ++deg;
  }
  return deg;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (int n = 0; n <= max_dimension(); ++n) {
    out.insert(out.end(), by_dim_[n].begin(), by_dim_[n].end());
  }
  return out;
}

Eigen::MatrixXi boundary_matrix_int(const SimplicialComplex& k, int n) {
  if (n < 0 || n > k.max_dimension()) {
    throw DimensionOutOfRange("boundary_matrix: dimension " + std::to_string(n));
  }
  const auto& cols = k.simplices(n);
  const std::size_t nrows = n == 0 ? 0 : k.size(n - 1);
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(nrows, cols.size());
  if (n == 0) return b;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Simplex& s = cols[j];
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + i);
      b(k.index_of(face), j) = sign;
      sign = -sign;
    }
  }
  return b;
}

Matrix boundary_matrix(const SimplicialComplex& k, int n) {
  return boundary_matrix_int(k, n).cast<double>();
}

Matrix combinatorial_laplacian(const SimplicialComplex& k, int n) {
  if (n < 0 || n > k.max_dimension()) {
    throw DimensionOutOfRange("combinatorial_laplacian: dimension " + std::to_string(n));
  }
  const Eigen::Index sz = static_cast<Eigen::Index>(k.size(n));
  Matrix lap = Matrix::Zero(sz, sz);
  Matrix dn = boundary_matrix(k, n);
  lap += dn.transpose() * dn;
  if (n + 1 <= k.max_dimension()) {
    Matrix dnp1 = boundary_matrix(k, n + 1);
    lap += dnp1 * dnp1.transpose();
  }
  return lap;
}

namespace {

int boundary_rank(const SimplicialComplex& k, int n) {
  if (n < 0 || n > k.max_dimension() || k.size(n) == 0) return 0;
  Eigen::MatrixXi b = boundary_matrix_int(k, n);
  if (b.rows() == 0) return 0;
  RationalMatrix rm(b.rows(), std::vector<Rational>(b.cols()));
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) rm[i][j] = Rational(b(i, j));
  return exact_rank(std::move(rm));
}

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& k, int up_to) {
  std::vector<int> betti;
  for (int n = 0; n <= up_to; ++n) {
    const int cn = static_cast<int>(k.size(n));
    betti.push_back(cn - boundary_rank(k, n) - boundary_rank(k, n + 1));
  }
  return betti;
}

ReducedBetti reduced_betti_numbers(const SimplicialComplex& k, int up_to) {
  ReducedBetti out;
  if (k.empty()) {
    out.empty_complex = true;
    out.betti.assign(up_to + 1, 0);
    return out;
  }
  out.betti = betti_numbers(k, up_to);
  if (!out.betti.empty()) out.betti[0] -= 1;
  return out;
}

}  // namespace pll
