#include "sgraph/polynomial.hpp"

#include <limits>
#include <sstream>

#include "sgraph/graph.hpp"

namespace sgraph {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in polynomial arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in polynomial arithmetic");
  return r;
}

long long to_int64(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<long long>::max()) || x < BigInt(std::numeric_limits<long long>::min()))
    throw Error("integer overflow converting to int64");
  return static_cast<long long>(x);
}

IntPolynomial::IntPolynomial(std::vector<long long> coefficients) : c_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, long long c) {
  std::vector<long long> v(static_cast<std::size_t>(degree + 1), 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_roots(const std::vector<long long>& roots) {
  IntPolynomial p = constant(1);
  for (long long r : roots) p *= IntPolynomial({-r, 1});
  return p;
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::substitute(long long a, long long b, long long d, long long scale) const {
  if (d == 0) throw InvalidArgument("substitution with zero denominator");
  // Horner over rational coefficients, then demand integrality.
  std::vector<Rational> acc;
  const Rational ra = Rational(a) / d, rb = Rational(b) / d;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * rb;
      next[i + 1] += acc[i] * ra;
    }
    next[0] += Rational(*it);
    acc = std::move(next);
  }
  std::vector<long long> out;
  for (auto q : acc) {
    q *= scale;
    if (denominator(q) != 1) throw Error("substitution produced a non-integer coefficient");
    out.push_back(to_int64(numerator(q)));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], checked_mul(-1, o.c_[i]));
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<long long> p(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] = checked_add(p[i + j], checked_mul(c_[i], o.c_[j]));
  c_ = std::move(p);
  trim();
  return *this;
}

std::string IntPolynomial::format(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    long long c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    unsigned long long mag = c < 0 ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || d == 0) os << mag;
    if (d >= 1) os << var;
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

}  // namespace sgraph
