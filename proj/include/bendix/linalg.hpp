#pragma once

#include <optional>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "bendix/rational.hpp"

namespace bendix {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

// Exact Gaussian elimination. No pivot thresholds: a pivot is any nonzero entry.

/// Reduces `m` in place to row echelon form and returns its rank.
Eigen::Index row_echelon(RationalMatrix& m);

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix work = m.template cast<Rational>();
  return row_echelon(work);
}

Rational exact_determinant(RationalMatrix m);

/// Solution of a square system, absent when the matrix is singular.
std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b);

std::optional<RationalMatrix> exact_inverse(const RationalMatrix& a);

/// The positive multiple of `v` with coprime integer entries; zero stays zero.
IntegerVector primitive(const RationalVector& v);

/// Integer entries of `v`, if every entry is integral.
std::optional<IntegerVector> as_integer(const RationalVector& v);
std::optional<IntegerMatrix> as_integer(const RationalMatrix& m);

bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace bendix
