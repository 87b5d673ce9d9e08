#include "sgraph/exact.hpp"

#include <stdexcept>
#include <utility>

#include "sgraph/graph.hpp"

namespace sgraph {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  Matrix<BigInt> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  RationalMatrix a = m;
  const int n = a.rows();
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RationalMatrix rref(RationalMatrix a) {
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int p = row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    Rational pivot = a(row, c);
    for (int j = 0; j < a.cols(); ++j) a(row, j) /= pivot;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
  }
  RationalMatrix out(row, a.cols());
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

int rank(const RationalMatrix& m) { return rref(m).rows(); }

void IncrementalEchelon::reduce(std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != dimension_) throw InvalidArgument("vector has wrong dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto p = static_cast<std::size_t>(pivots_[r]);
    if (v[p] == 0) continue;
    Rational f = v[p];  // rows are normalised to pivot 1
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * rows_[r][j];
  }
}

bool IncrementalEchelon::add(std::vector<Rational> v) {
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Rational pivot = v[p];
  for (auto& x : v) x /= pivot;
  // Keep earlier rows reduced against the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    Rational f = row[p];
    for (std::size_t j = 0; j < v.size(); ++j) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(static_cast<int>(p));
  return true;
}

bool IncrementalEchelon::spans(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace sgraph
