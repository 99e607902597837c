#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "tmono/errors.hpp"
#include "tmono/random.hpp"
#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"

using namespace tmono;

namespace {

std::map<std::string, int> poly_histogram(const Tournament& t, std::size_t k, Mode mode) {
  std::map<std::string, int> h;
  principal_char_polys(t, k, mode, [&](VertexSet, const IntPoly& p) {
    ++h[format_human(p)];
    return true;
  });
  return h;
}

std::uint64_t mask_of(const std::vector<std::size_t>& s) {
  std::uint64_t m = 0;
  for (std::size_t v : s) m |= std::uint64_t{1} << v;
  return m;
}

// Witness the way the contract describes it, recomputed with oracle kernels:
// the colex-first subset against the colex-least subset that differs.
std::pair<std::uint64_t, std::uint64_t> oracle_witness(const oracle::Dense& m, std::size_t k) {
  auto subs = oracle::subsets(m.size(), k);
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return mask_of(a) < mask_of(b); });
  const IntPoly first = oracle::char_poly(oracle::principal(m, subs[0]));
  for (const auto& s : subs)
    if (oracle::char_poly(oracle::principal(m, s)) != first) return {mask_of(subs[0]), mask_of(s)};
  return {0, 0};
}

}  // namespace

TEST_CASE("principal polynomial enumeration") {
  CHECK(poly_histogram(transitive(5), 3, Mode::adjacency) == std::map<std::string, int>{{"z^3", 10}});
  CHECK(poly_histogram(paley(7), 3, Mode::adjacency) == std::map<std::string, int>{{"z^3", 21}, {"z^3 - 1", 14}});
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(poly_histogram(random_tournament(7, rng), 3, Mode::skew) == std::map<std::string, int>{{"z^3 + 3z", 35}});

  // Streaming stops when asked.
  int calls = 0;
  principal_char_polys(paley(7), 4, Mode::adjacency, [&](VertexSet, const IntPoly&) { return ++calls < 3; });
  CHECK(calls == 3);
}

TEST_CASE("named monomorphy verdicts") {
  const MonomorphyVerdict p5 = spectral_monomorphy(paley(7), 5);
  REQUIRE(p5.monomorphic());
  CHECK(*p5.common == IntPoly{-2, -3, -4, 0, 0, 1});
  CHECK(*p5.common == IntPoly{2, 1, 1} * IntPoly{-1, -1, -1, 1});

  const MonomorphyVerdict p6 = spectral_monomorphy(paley(7), 6);
  REQUIRE(p6.monomorphic());
  CHECK(*p6.common == IntPoly{-4, -12, -9, -8, 0, 0, 1});
  CHECK(*p6.common == pow(IntPoly{2, 1, 1}, 2) * IntPoly{-1, -2, 1});

  const MonomorphyVerdict ce = spectral_monomorphy(counterexample7(), 6);
  REQUIRE_FALSE(ce.monomorphic());
  CHECK(ce.witness->poly_alpha != ce.witness->poly_beta);
  CHECK(ce.witness->alpha.size() == 6);
  CHECK(ce.witness->alpha < ce.witness->beta);

  CHECK(spectral_monomorphy(reversed_transitive(6), 5, Mode::skew).monomorphic());
  CHECK_FALSE(spectral_monomorphy(reversed_transitive(6), 5, Mode::adjacency).monomorphic());
  CHECK_THROWS_AS(spectral_monomorphy(paley(7), 0), PreconditionError);
  CHECK_THROWS_AS(spectral_monomorphy(paley(7), 8), PreconditionError);
}

TEST_CASE("trivial sizes are computed, not special-cased") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Tournament t = random_tournament(1 + trial % 9, rng);
    const std::size_t n = t.order();
    for (Mode mode : {Mode::adjacency, Mode::skew}) {
      const auto full = spectral_monomorphy(t, n, mode);
      REQUIRE(full.monomorphic());
      CHECK(*full.common == char_poly(t, mode));
      CHECK(spectral_monomorphy(t, 1, mode).monomorphic());
      if (n >= 2) CHECK(spectral_monomorphy(t, 2, mode).monomorphic());
    }
  }
}

TEST_CASE("monomorphy and witnesses agree with the oracle") {
  Rng rng(12);
  for (std::size_t n = 3; n <= 6; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      const Tournament t = random_tournament(n, rng);
      for (Mode mode : {Mode::adjacency, Mode::skew}) {
        const oracle::Dense m = mode == Mode::skew ? oracle::skew(t) : oracle::adjacency(t);
        for (std::size_t k = 1; k <= n; ++k) {
          const MonomorphyVerdict v = spectral_monomorphy(t, k, mode);
          CHECK(v.monomorphic() == oracle::monomorphic(m, k));
          if (!v.monomorphic()) {
            const auto [a, b] = oracle_witness(m, k);
            CHECK(v.witness->alpha.mask() == a);
            CHECK(v.witness->beta.mask() == b);
          }
        }
      }
    }
}

TEST_CASE("parallel evaluation is deterministic") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Tournament t = random_tournament(11, rng);
    for (std::size_t k : {4UL, 7UL, 10UL}) {
      const MonomorphyVerdict one = spectral_monomorphy(t, k, Mode::adjacency, 1);
      for (unsigned jobs : {2U, 3U, 8U}) {
        const MonomorphyVerdict many = spectral_monomorphy(t, k, Mode::adjacency, jobs);
        CHECK(many.monomorphic() == one.monomorphic());
        if (!one.monomorphic()) {
          CHECK(many.witness->alpha == one.witness->alpha);
          CHECK(many.witness->beta == one.witness->beta);
        }
      }
    }
  }
  const Tournament t21 = triple(paley(7), paley(7), counterexample7());
  const auto a = spectral_monomorphy(t21, 20, Mode::adjacency, 1);
  const auto b = spectral_monomorphy(t21, 20, Mode::adjacency, 4);
  REQUIRE_FALSE(a.monomorphic());
  CHECK(a.witness->beta == b.witness->beta);
}

TEST_CASE("average polynomial via derivatives") {
  CHECK(common_poly_via_derivative(paley(7), 5) == to_rational(IntPoly{-2, -3, -4, 0, 0, 1}));
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k) CHECK(common_poly_via_derivative(transitive(n), k) == to_rational(IntPoly::monomial(1, k)));
  // For counterexample7 the average over the 7 deletions is not even integral.
  const RatPoly avg = common_poly_via_derivative(counterexample7(), 6);
  CHECK_THROWS_AS(to_integral(avg), IntegralityError);
  RatPoly sum;
  bool differs = false;
  principal_char_polys(counterexample7(), 6, Mode::adjacency, [&](VertexSet, const IntPoly& p) {
    differs = differs || to_rational(p) != avg;
    sum += to_rational(p);
    return true;
  });
  CHECK(differs);
  CHECK(sum * make_rational(1, 7) == avg);
  Rng rng(60);
  for (int trial = 0; trial < 20; ++trial) {
    const Tournament t = random_tournament(6, rng);
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto v = spectral_monomorphy(t, k);
      if (v.monomorphic()) CHECK(common_poly_via_derivative(t, k) == to_rational(*v.common));
    }
  }
}

TEST_CASE("superset minor sums") {
  const IntMatrix a = adjacency_matrix(paley(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) CHECK(superset_minor_sum(a, VertexSet::of({i, j}), 3) == 2);
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Tournament t = random_tournament(7, rng);
    CHECK(superset_minor_sum(adjacency_matrix(t), VertexSet(), 3) == BigInt(static_cast<unsigned long>(oracle::three_cycles(t))));
  }
  const IntMatrix t6 = adjacency_matrix(transitive(6));
  CHECK(superset_minor_sum(t6, VertexSet::of({1, 4}), 3) == 0);
  CHECK(superset_minor_sum(t6, VertexSet(), 5) == 0);
  CHECK_THROWS_AS(superset_minor_sum(t6, VertexSet::of({0, 1, 2}), 2), PreconditionError);
}

TEST_CASE("closed forms") {
  const DoublyRegularPolys d7 = doubly_regular_polys(7);
  CHECK(d7.full == IntPoly{-24, -28, -42, -21, -14, 0, 0, 1});
  CHECK(d7.sub2 == IntPoly{-2, -3, -4, 0, 0, 1});
  CHECK(d7.sub1 == IntPoly{-4, -12, -9, -8, 0, 0, 1});
  for (std::size_t p : {11UL, 19UL, 23UL}) {
    const DoublyRegularPolys d = doubly_regular_polys(p);
    CHECK(d.full == char_poly(paley(p)));
    const auto v1 = spectral_monomorphy(paley(p), p - 1);
    REQUIRE(v1.monomorphic());
    CHECK(*v1.common == d.sub1);
  }
  CHECK_THROWS_AS(doubly_regular_polys(9), PreconditionError);

  CHECK(rn_poly(3) == IntPoly{-1, 0, 0, 1});
  CHECK(rn_poly(4) == IntPoly{-1, -2, 0, 0, 1});
  for (std::size_t n = 3; n <= 12; ++n) CHECK(rn_poly(n) == char_poly(reversed_transitive(n)));
}

TEST_CASE("adjacency to skew polynomial conversion") {
  CHECK(skew_from_adjacency_poly(IntPoly{-1, 0, 0, 1}, 3) == IntPoly{0, 3, 0, 1});
  CHECK(skew_from_adjacency_poly(IntPoly::monomial(1, 3), 3) == IntPoly{0, 3, 0, 1});
  const IntPoly p7 = skew_from_adjacency_poly(char_poly(paley(7)), 7);
  CHECK(p7 == char_poly(paley(7), Mode::skew));
  CHECK(p7 == IntPoly{0, 343, 0, 147, 0, 21, 0, 1});
  CHECK(skew_from_adjacency_poly(IntPoly{-1, 0, 0, 1}, 3, Convention::as_printed) == IntPoly{-9, 0, -3});
  CHECK_THROWS_AS(skew_from_adjacency_poly(IntPoly{1, 2}, 3), PreconditionError);
}

TEST_CASE("regular deletion identity") {
  CHECK(regular_deletion_identity(paley(3), 0));
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(regular_deletion_identity(paley(7), i));
    CHECK(regular_deletion_identity(counterexample7(), i));
  }
  CHECK_THROWS_AS(regular_deletion_identity(transitive(4), 0), PreconditionError);
}

TEST_CASE("lambda shift identity") {
  CHECK(lambda_shift_identity(paley(3), Rational(1)));
  CHECK(lambda_shift_identity(paley(7), Rational(0)));
  CHECK(lambda_shift_identity(paley(7), make_rational(-1, 2)));
  CHECK(lambda_shift_identity(transitive(5), make_rational(1, 3)));
  // 2^7 P_{A - J/2}((z-1)/2) is the skew polynomial of paley(7).
  const RatMatrix shifted = adjacency_matrix(paley(7)).cast<Rational>() - make_rational(1, 2) * RatMatrix::ones(7);
  const RatPoly q = affine_substitute_rational(char_poly_rational(shifted), make_rational(1, 2), make_rational(-1, 2));
  CHECK(to_integral(BigInt(128) * q) == char_poly(paley(7), Mode::skew));
}

TEST_CASE("skew difference identity") {
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      if (i != j) {
        CHECK(skew_difference_identity(paley(7), i, j));
        CHECK(skew_difference_identity(counterexample7(), i, j));
      }
  for (std::size_t j = 1; j < 5; ++j) CHECK(skew_difference_identity(circulant(5, VertexSet::of({1, 2})), 0, j));
  const auto ce = spectral_monomorphy(counterexample7(), 6);
  REQUIRE_FALSE(ce.monomorphic());
  const std::size_t i = static_cast<std::size_t>(std::countr_zero(ce.witness->alpha.complement_in(7).mask()));
  const std::size_t j = static_cast<std::size_t>(std::countr_zero(ce.witness->beta.complement_in(7).mask()));
  CHECK(skew_difference_identity(counterexample7(), i, j));
  CHECK_FALSE(skew_difference_identity(counterexample7(), i, j, Convention::as_printed));
  CHECK_THROWS_AS(skew_difference_identity(paley(7), 2, 2), PreconditionError);
}

TEST_CASE("matrix identities") {
  Rng rng(30);
  for (std::size_t n = 1; n <= 6; ++n) {
    const IntMatrix m = random_int_matrix(n, rng);
    CHECK(coefficient_minor_identity(m));
    for (std::size_t k = 1; k <= n; ++k) CHECK(derivative_sum_identity(m, k));
    CHECK(aat_identity(random_tournament(n, rng)));
  }
  // The coefficient identity on the oracle side: a_k = (-1)^k * sum of k-minors.
  const Tournament t = random_tournament(6, rng);
  const oracle::Dense a = oracle::adjacency(t);
  const IntPoly p = char_poly(t);
  for (std::size_t k = 1; k <= 6; ++k) {
    BigInt sum = 0;
    for (const auto& s : oracle::subsets(6, k)) sum += oracle::leibniz_det(oracle::principal(a, s));
    CHECK(p.coeff(6 - k) == (k % 2 ? -sum : sum));
  }
}

TEST_CASE("doubly regular block identity") {
  for (std::size_t p : {7UL, 11UL})
    for (std::size_t x = 0; x < p; ++x)
      for (std::size_t y = 0; y < p; ++y)
        if (x != y && paley(p).dominates(x, y)) CHECK(doubly_regular_block_identity(paley(p), x, y));
  CHECK_THROWS_AS(doubly_regular_block_identity(counterexample7(), 0, 4), PreconditionError);
}

TEST_CASE("classify_n2") {
  CHECK(classify_n2(transitive(6)) == N2Class::transitive);
  CHECK(classify_n2(paley(7)) == N2Class::doubly_regular);
  CHECK(classify_n2(counterexample7()) == N2Class::not_monomorphic);
  CHECK(to_string(N2Class::doubly_regular) == "DoublyRegular");
  CHECK_THROWS_AS(classify_n2(paley(3)), PreconditionError);
  Rng rng(40);
  for (int trial = 0; trial < 200; ++trial) CHECK_NOTHROW(classify_n2(random_tournament(5 + trial % 4, rng)));
}

TEST_CASE("subtournament polynomial table") {
  for (Mode mode : {Mode::adjacency, Mode::skew}) {
    const SubtournamentPolyTable table(5, 3, mode);
    CHECK(table.subset_count() == 10);
    for (std::uint64_t code = 0; code < (1U << 10); ++code) {
      const Tournament t = from_arc_code(5, code);
      CHECK(table.monomorphic(code) == spectral_monomorphy(t, 3, mode).monomorphic());
    }
  }
  const SubtournamentPolyTable t75(7, 5, Mode::adjacency);
  Rng rng(50);
  for (int trial = 0; trial < 100; ++trial) {
    const Tournament t = random_tournament(7, rng);
    const std::uint64_t code = arc_code(t);
    std::size_t rank = 0;
    principal_char_polys(t, 5, Mode::adjacency, [&](VertexSet, const IntPoly& p) {
      CHECK(t75.poly(t75.subset_poly_id(code, rank++)) == p);
      return true;
    });
    CHECK(t75.monomorphic(code) == spectral_monomorphy(t, 5).monomorphic());
  }
  CHECK(t75.monomorphic(arc_code(paley(7))));
  CHECK_THROWS_AS(SubtournamentPolyTable(12, 5, Mode::adjacency), UnsupportedError);
}

TEST_CASE("hereditary property on 5-vertex tournaments") {
  for (std::uint64_t code = 0; code < (1U << 10); ++code) {
    const Tournament t = from_arc_code(5, code);
    for (std::size_t k = 1; k <= 5; ++k) {
      if (!spectral_monomorphy(t, k).monomorphic()) continue;
      for (std::size_t l = 1; l <= std::min(k, 5 - k); ++l) CHECK(spectral_monomorphy(t, l).monomorphic());
    }
  }
}
