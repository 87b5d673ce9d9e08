#pragma once

#include <string>
#include <vector>

#include "sgraph/exact.hpp"

namespace sgraph {

/// Integer polynomial in λ, coefficients ascending by degree, no trailing
/// zeros (the zero polynomial has none). Arithmetic throws on int64 overflow.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coefficients);

  static IntPolynomial constant(long long c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(int degree, long long c = 1);
  static IntPolynomial lambda() { return monomial(1); }
  /// Π (λ - r) over `roots`.
  static IntPolynomial from_roots(const std::vector<long long>& roots);

  const std::vector<long long>& coefficients() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  long long coefficient(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(d)] : 0; }

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;
  BigInt operator()(long long x) const { return (*this)(BigInt(x)); }

  /// scale * p((a λ + b) / d), which must have integer coefficients.
  IntPolynomial substitute(long long a, long long b, long long d = 1, long long scale = 1) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(long long k, const IntPolynomial& p) { return IntPolynomial::constant(k) * p; }
  IntPolynomial operator-() const { return IntPolynomial() - *this; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "λ^3 - 9λ^2 + 23λ - 15"; "0" for the zero polynomial.
  std::string format(const std::string& var = "λ") const;

 private:
  void trim();
  std::vector<long long> c_;
};

/// Overflow-checked helpers shared with the enumeration code.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
long long to_int64(const BigInt& x);

}  // namespace sgraph
