#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "tmono/matrix.hpp"
#include "tmono/tournament.hpp"

namespace tmono {

using Rng = std::mt19937_64;

// Uniform labeled n-tournament.
Tournament random_tournament(std::size_t n, Rng& rng);

// Circulant with each of the (n-1)/2 symbol pairs oriented at random. n odd.
Tournament random_circulant(std::size_t n, Rng& rng);

// Regular tournament: a random circulant followed by `steps` reversals of
// randomly chosen directed 3-cycles (which preserve every out-degree).
Tournament random_regular(std::size_t n, Rng& rng, std::size_t steps = 200);

// Square matrix with independent entries in [lo, hi].
IntMatrix random_int_matrix(std::size_t n, Rng& rng, int lo = -3, int hi = 3);

}  // namespace tmono
