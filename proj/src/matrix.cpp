#include "tmono/matrix.hpp"

#include <algorithm>

namespace tmono {

namespace {

template <class R>
Poly<R> ascending(std::vector<R> descending) {
  std::reverse(descending.begin(), descending.end());
  return Poly<R>(std::move(descending));
}

}  // namespace

IntPoly char_poly(const IntMatrix& m) {
  return ascending(detail::berkowitz_descending<BigInt, BigInt>(m));
}

IntPoly char_poly(const SmallIntMatrix& m) {
  return ascending(detail::berkowitz_descending<int, BigInt>(m));
}

RatPoly char_poly_rational(const RatMatrix& m) {
  return ascending(detail::berkowitz_descending<Rational, Rational>(m));
}

BigInt det_exact(const IntMatrix& input) {
  const std::size_t n = input.order();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Sylvester's identity guarantees exactness.
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

BigInt det_exact(const SmallIntMatrix& m) { return det_exact(m.cast<BigInt>()); }

}  // namespace tmono
