#include "pll/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace pll {

bool is_integral(const Matrix& m, double eps) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::round(m(i, j))) > eps) return false;
  return true;
}

RationalMatrix to_rational(const Matrix& m) {
  RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      r[i][j] = Rational(static_cast<long long>(std::llround(m(i, j))));
  return r;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_echelon(RationalMatrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != Rational(0)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    Rational inv = Rational(1) / m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == Rational(0)) continue;
      Rational factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int exact_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const int cols = static_cast<int>(m[0].size());
  return static_cast<int>(row_echelon(m, cols).size());
}

RationalMatrix exact_nullspace(const RationalMatrix& m, int cols) {
  RationalMatrix red = m;
  if (red.empty()) red.emplace_back(cols, Rational(0));
  std::vector<int> pivots = row_echelon(red, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  const int k = cols - static_cast<int>(pivots.size());
  RationalMatrix basis(cols, std::vector<Rational>(k, Rational(0)));
  int out = 0;
  for (int freecol = 0; freecol < cols; ++freecol) {
    if (is_pivot[freecol]) continue;
    basis[freecol][out] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis[pivots[r]][out] = -red[r][freecol];
    }
    ++out;
  }
  return basis;
}

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hconcat: row mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  }
  return out;
}

RationalMatrix rmul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = inner == 0 ? 0 : b[0].size();
  RationalMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i].empty() && a[i].size() != inner)
      throw std::invalid_argument("rmul: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == Rational(0)) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace pll
