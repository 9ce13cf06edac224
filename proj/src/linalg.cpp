#include "bendix/linalg.hpp"

#include <utility>

namespace bendix {

Eigen::Index row_echelon(RationalMatrix& m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      m.row(r) -= factor * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

Rational exact_determinant(RationalMatrix m) {
  const Eigen::Index n = m.rows();
  Rational det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      m.row(r) -= factor * m.row(col);
    }
  }
  return det;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b) {
  const Eigen::Index n = a.rows();
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    aug.row(pivot).swap(aug.row(col));
    const Rational inv = 1 / aug(col, col);
    aug.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      const Rational factor = aug(r, col);
      aug.row(r) -= factor * aug.row(col);
    }
  }
  return RationalVector(aug.col(n));
}

std::optional<RationalMatrix> exact_inverse(const RationalMatrix& a) {
  const Eigen::Index n = a.rows();
  RationalMatrix inverse(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    RationalVector e = RationalVector::Zero(n);
    e(c) = 1;
    auto x = solve_unique(a, e);
    if (!x) return std::nullopt;
    inverse.col(c) = *x;
  }
  return inverse;
}

IntegerVector primitive(const RationalVector& v) {
  Integer common = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) common = lcm(common, denominator(v(i)));
  IntegerVector out(v.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = numerator(v(i)) * (common / denominator(v(i)));
    g = gcd(g, out(i));
  }
  if (g > 1) {
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= g;
  }
  return out;
}

std::optional<IntegerVector> as_integer(const RationalVector& v) {
  IntegerVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (denominator(v(i)) != 1) return std::nullopt;
    out(i) = numerator(v(i));
  }
  return out;
}

std::optional<IntegerMatrix> as_integer(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (denominator(m(r, c)) != 1) return std::nullopt;
      out(r, c) = numerator(m(r, c));
    }
  }
  return out;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

}  // namespace bendix
