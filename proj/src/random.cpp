#include "tmono/random.hpp"

#include <vector>

#include "tmono/errors.hpp"

namespace tmono {

Tournament random_tournament(std::size_t n, Rng& rng) {
  if (n == 0 || n > kMaxVertices) throw PreconditionError("random_tournament: bad order");
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (rng() & 1U) out[i] |= std::uint64_t{1} << j;
      else out[j] |= std::uint64_t{1} << i;
    }
  return Tournament::from_out_rows(std::move(out));
}

Tournament random_circulant(std::size_t n, Rng& rng) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("random_circulant: n must be odd and >= 3");
  std::uint64_t symbols = 0;
  for (std::size_t s = 1; s <= (n - 1) / 2; ++s) symbols |= std::uint64_t{1} << ((rng() & 1U) ? s : n - s);
  return circulant(n, VertexSet(symbols));
}

Tournament random_regular(std::size_t n, Rng& rng, std::size_t steps) {
  const Tournament start = random_circulant(n, rng);
  std::vector<std::uint64_t> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = start.out_mask(v);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    auto dom = [&](std::size_t x, std::size_t y) { return (out[x] >> y) & 1U; };
    auto flip = [&](std::size_t x, std::size_t y) {
      out[x] &= ~(std::uint64_t{1} << y);
      out[y] |= std::uint64_t{1} << x;
    };
    if (dom(a, b) && dom(b, c) && dom(c, a)) {
      flip(a, b);
      flip(b, c);
      flip(c, a);
    }
  }
  return Tournament::from_out_rows(std::move(out));
}

IntMatrix random_int_matrix(std::size_t n, Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace tmono
