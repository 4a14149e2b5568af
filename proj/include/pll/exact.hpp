#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "pll/numerics.hpp"

namespace pll {

// Exact rational linear algebra for the homology oracles. Inputs in this
// code base are small signed-integer matrices, so plain Gaussian
// elimination over boost::rational stays well within long long range.

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

bool is_integral(const Matrix& m, double eps = 1e-9);

RationalMatrix to_rational(const Matrix& m);

int exact_rank(RationalMatrix m);

/// Columns spanning the (right) null space of m, as a rows(m.cols) x k matrix.
RationalMatrix exact_nullspace(const RationalMatrix& m, int cols);

/// [a | b] with matching row counts.
RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);

/// Product of two rational matrices.
RationalMatrix rmul(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace pll
