#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tmono/bigint.hpp"

namespace tmono {

// Dense univariate polynomial in z over a commutative ring R, coefficients in
// ascending degree. Always canonical: no trailing zero coefficient, and the
// zero polynomial has an empty coefficient list. Structural equality is
// therefore mathematical equality.
template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<R> ascending) : coeffs_(ascending) { trim(); }
  explicit Poly(std::vector<R> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }

  static Poly monomial(const R& c, std::size_t degree) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = c;
    return Poly(std::move(v));
  }

  // a*z + b
  static Poly linear(const R& a, const R& b) { return Poly(std::vector<R>{b, a}); }

  const std::vector<R>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }

  R leading() const { return coeffs_.empty() ? R(0) : coeffs_.back(); }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  R eval(const R& x) const {
    R acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const R& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }

  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Lexicographic on (degree, coefficients from the top). Only used to give
  // polynomials a deterministic order in maps and reports.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                        b.coeffs_.rend());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned long exponent) {
  Poly<R> result = Poly<R>::constant(R(1));
  Poly<R> b = base;
  while (exponent != 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

// m-th formal derivative.
IntPoly derivative(const IntPoly& p, unsigned long m);

// p(-z-1)
IntPoly reflect_shift(const IntPoly& p);

// c * p((a*z + b) / d), computed over the rationals. Throws IntegralityError
// when some resulting coefficient is not an integer, PreconditionError when
// d < 1.
IntPoly affine_substitute(const IntPoly& p, const BigInt& a, const BigInt& b, const BigInt& d,
                          const Rational& c);

// Same substitution with the rational result returned as is.
RatPoly affine_substitute_rational(const RatPoly& p, const Rational& a, const Rational& b);

RatPoly to_rational(const IntPoly& p);

// Throws IntegralityError if a coefficient has a denominator other than 1.
IntPoly to_integral(const RatPoly& p);

// Exact division by a nonzero integer scalar; throws IntegralityError if some
// coefficient is not divisible.
IntPoly exact_divide(const IntPoly& p, const BigInt& divisor);

// Human form, descending powers: "z^7 - 14z^4 - 21z^3 - 42z^2 - 28z - 24".
std::string format_human(const IntPoly& p);
std::string format_human(const RatPoly& p);

// Machine form, ascending coefficients: "[-24,-28,-42,-21,-14,0,0,1]".
std::string format_machine(const IntPoly& p);

// Inverse of format_machine. Whitespace after commas is tolerated.
IntPoly parse_machine(const std::string& text);

}  // namespace tmono
