#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tmono/bigint.hpp"
#include "tmono/errors.hpp"
#include "tmono/poly.hpp"

namespace tmono {

// Square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t order, const T& fill = T(0)) : n_(order), data_(order * order, fill) {}

  static Matrix identity(std::size_t order) {
    Matrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T(1);
    return m;
  }

  // J_n
  static Matrix ones(std::size_t order) { return Matrix(order, T(1)); }

  std::size_t order() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  // M[alpha] for a strictly increasing index list.
  Matrix principal(std::span<const std::size_t> alpha) const {
    Matrix m(alpha.size());
    for (std::size_t a = 0; a < alpha.size(); ++a)
      for (std::size_t b = 0; b < alpha.size(); ++b) m(a, b) = (*this)(alpha[a], alpha[b]);
    return m;
  }

  Matrix transpose() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = U((*this)(i, j));
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
// Entries known to be tiny (0/1 adjacency, 0/±1 skew). Arithmetic on the
// characteristic polynomial still happens in BigInt.
using SmallIntMatrix = Matrix<int>;

namespace detail {

inline void fma_into(BigInt& acc, int e, const BigInt& v) {
  switch (e) {
    case 0: return;
    case 1: acc += v; return;
    case -1: acc -= v; return;
    default:
      if (e > 0) mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
      else mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-static_cast<long>(e)));
  }
}

inline void fma_into(BigInt& acc, const BigInt& e, const BigInt& v) {
  mpz_addmul(acc.get_mpz_t(), e.get_mpz_t(), v.get_mpz_t());
}

inline void fma_into(Rational& acc, const Rational& e, const Rational& v) {
  if (e == 0 || v == 0) return;
  acc += e * v;
}

// Division-free Berkowitz: builds det(zI - A[r..n)) for r = n-1 down to 0 by
// multiplying with the Toeplitz matrix of (1, -a_rr, -R C, -R S C, ...).
// Returns descending coefficients.
template <class E, class R>
std::vector<R> berkowitz_descending(const Matrix<E>& a) {
  const std::size_t n = a.order();
  if (n == 0) return {R(1)};
  std::vector<R> v{R(1), R(0)};
  fma_into(v[1], a(n - 1, n - 1), R(-1));
  std::vector<R> cur, next, t;
  for (std::size_t r = n - 1; r-- > 0;) {
    const std::size_t m = n - r - 1;
    t.assign(m + 2, R(0));
    t[0] = 1;
    fma_into(t[1], a(r, r), R(-1));
    cur.assign(m, R(0));
    for (std::size_t i = 0; i < m; ++i) fma_into(cur[i], a(r + 1 + i, r), R(1));
    for (std::size_t k = 0; k < m; ++k) {
      R s = 0;
      for (std::size_t j = 0; j < m; ++j) fma_into(s, a(r, r + 1 + j), cur[j]);
      t[k + 2] = -s;
      if (k + 1 == m) break;
      next.assign(m, R(0));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) fma_into(next[i], a(r + 1 + i, r + 1 + j), cur[j]);
      cur.swap(next);
    }
    std::vector<R> w(m + 2, R(0));
    for (std::size_t i = 0; i < m + 2; ++i)
      for (std::size_t j = 0; j <= m && j <= i; ++j) {
        if (v[j] == 0 || t[i - j] == 0) continue;
        w[i] += t[i - j] * v[j];
      }
    v.swap(w);
  }
  return v;
}

}  // namespace detail

// det(zI - M), exact. Division-free.
IntPoly char_poly(const IntMatrix& m);
IntPoly char_poly(const SmallIntMatrix& m);

// Same over the rationals.
RatPoly char_poly_rational(const RatMatrix& m);

// Fraction-free (Bareiss) elimination with row pivoting.
BigInt det_exact(const IntMatrix& m);
BigInt det_exact(const SmallIntMatrix& m);

}  // namespace tmono
