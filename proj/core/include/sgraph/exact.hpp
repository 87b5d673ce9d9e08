#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& row : init) data_.insert(data_.end(), row.begin(), row.end());
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  T& operator()(int r, int c) { return data_.at(index(r, c)); }
  const T& operator()(int r, int c) const { return data_.at(index(r, c)); }

  std::vector<T> column(int c) const {
    std::vector<T> out;
    for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(T k, Matrix a) {
    for (auto& x : a.data_) x *= k;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (int r = 0; r < m.rows_; ++r) {
      for (int c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
      os << '\n';
    }
    return os;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
BigInt determinant(const IntMatrix& m);
Rational determinant(const RationalMatrix& m);

int rank(const RationalMatrix& m);
inline int rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Reduced row echelon form with zero rows dropped; a canonical basis of
/// the row space.
RationalMatrix rref(RationalMatrix m);

/// Maintains a row echelon basis; add() reports whether the vector was
/// independent of those added before.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(int dimension) : dimension_(dimension) {}
  bool add(std::vector<Rational> v);
  bool spans(std::vector<Rational> v) const;
  int rank() const noexcept { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<Rational>& v) const;

  int dimension_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace sgraph
