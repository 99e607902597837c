#include <doctest.h>

#include "oracles.hpp"
#include "tmono/errors.hpp"
#include "tmono/random.hpp"
#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"

using namespace tmono;

namespace {

// Least mask over the 2^n sets whose switch has the property, reduced so that
// vertex n-1 is outside X.
template <class Pred>
std::optional<std::uint64_t> oracle_find(const Tournament& t, Pred pred) {
  const std::size_t n = t.order();
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  std::optional<std::uint64_t> best;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (!pred(oracle::switch_by(t, x))) continue;
    const std::uint64_t canon = (x & top) ? (~x & (2 * top - 1)) : x;
    if (!best || canon < *best) best = canon;
  }
  return best;
}

}  // namespace

TEST_CASE("skew matrix") {
  const IntMatrix s = skew_matrix(parse_tournament("3\n010\n001\n100\n"));
  const long expect[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(s(i, j) == expect[i][j]);
}

TEST_CASE("skew-conference test matches S^T S") {
  CHECK(is_skew_conference(transitive(2)));
  CHECK(is_skew_conference(reversed_transitive(2)));
  CHECK_FALSE(is_skew_conference(paley(7)));
  CHECK_FALSE(oracle::conference(paley(7)));
  std::size_t found4 = 0;
  for (std::uint64_t code = 0; code < 64; ++code) {
    const Tournament t = from_arc_code(4, code);
    CHECK(is_skew_conference(t) == oracle::conference(t));
    found4 += is_skew_conference(t);
    if (is_skew_conference(t))
      for (std::size_t k = 1; k <= 3; ++k) CHECK(spectral_monomorphy(t, k, Mode::skew).monomorphic());
  }
  CHECK(found4 > 0);
  for (std::uint64_t code = 0; code < (1U << 10); ++code) CHECK_FALSE(is_skew_conference(from_arc_code(5, code)));
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Tournament t = random_tournament(8, rng);
    CHECK(is_skew_conference(t) == oracle::conference(t));
  }
  // Paley(7) plus a dominating vertex is the classical skew-conference matrix of order 8.
  std::vector<std::vector<int>> rows(8, std::vector<int>(8, 0));
  const Tournament p = paley(7);
  for (std::size_t i = 0; i < 7; ++i) {
    rows[7][i] = 1;
    for (std::size_t j = 0; j < 7; ++j) rows[i][j] = p.dominates(i, j);
  }
  const Tournament c8 = Tournament::from_adjacency(rows);
  CHECK(is_skew_conference(c8));
  CHECK(oracle::conference(c8));
  for (std::size_t k : {5UL, 6UL, 7UL}) CHECK(spectral_monomorphy(c8, k, Mode::skew).monomorphic());
}

TEST_CASE("find_switch examples") {
  CHECK(find_switch(reversed_transitive(6), SwitchTarget::transitive) == VertexSet::of({0}));
  CHECK(find_switch(transitive(5), SwitchTarget::transitive) == VertexSet());
  CHECK(find_switch(paley(7), SwitchTarget::doubly_regular) == VertexSet());
  CHECK_FALSE(find_switch(counterexample7(), SwitchTarget::transitive).has_value());
  CHECK_FALSE(find_switch(counterexample7(), SwitchTarget::doubly_regular).has_value());
  CHECK_THROWS_AS(find_switch(transitive(25), SwitchTarget::transitive), UnsupportedError);
}

TEST_CASE("find_switch agrees with the exhaustive orbit") {
  Rng rng(17);
  for (std::size_t n = 2; n <= 7; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      // Mix random tournaments with random switches of structured ones so both outcomes occur.
      Tournament t = random_tournament(n, rng);
      if (trial % 2 == 0) t = switch_tournament(transitive(n), VertexSet(rng() & VertexSet::all(n).mask()));
      if (trial % 5 == 0 && n == 7) t = switch_tournament(paley(7), VertexSet(rng() & 0x7F));
      const auto tr = find_switch(t, SwitchTarget::transitive);
      const auto want_tr = oracle_find(t, oracle::transitive);
      CHECK(tr.has_value() == want_tr.has_value());
      if (tr && want_tr) CHECK(tr->mask() == *want_tr);
      const auto dr = find_switch(t, SwitchTarget::doubly_regular);
      const auto want_dr = oracle_find(t, oracle::doubly_regular);
      CHECK(dr.has_value() == want_dr.has_value());
      if (dr && want_dr) CHECK(dr->mask() == *want_dr);
    }
}

TEST_CASE("labeled switching equivalence") {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Tournament a = random_tournament(n, rng);
    const Tournament b = switch_tournament(a, VertexSet(rng() & VertexSet::all(n).mask()));
    CHECK(are_switching_equivalent(a, b));
    const Tournament c = random_tournament(n, rng);
    CHECK(are_switching_equivalent(a, c) == (oracle::switch_orbit(a).count(serialize(c)) == 1));
  }
  const bool t4 = oracle::switch_orbit(transitive(4)).count(serialize(reversed_transitive(4))) == 1;
  CHECK(are_switching_equivalent(transitive(4), reversed_transitive(4)) == t4);
  CHECK_FALSE(t4);
  const bool c3 = oracle::switch_orbit(paley(3)).count(serialize(transitive(3))) == 1;
  CHECK(are_switching_equivalent(paley(3), transitive(3)) == c3);
  CHECK(c3);  // switching the 3-cycle at {0} is transitive
  CHECK(is_transitive(switch_tournament(paley(3), VertexSet::of({0}))));
  CHECK_THROWS_AS(are_switching_equivalent(paley(3), paley(7)), PreconditionError);
}

TEST_CASE("switching preserves skew spectra") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Tournament t = random_tournament(n, rng);
    const Tournament s = switch_tournament(t, VertexSet(rng() & VertexSet::all(n).mask()));
    CHECK(char_poly(s, Mode::skew) == char_poly(t, Mode::skew));
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(spectral_monomorphy(s, k, Mode::skew).monomorphic() == spectral_monomorphy(t, k, Mode::skew).monomorphic());
  }
}

TEST_CASE("skew classification") {
  const SkewClass r8 = classify_skew(reversed_transitive(8));
  CHECK(r8.tag == SkewTag::switch_of_transitive);
  CHECK(r8.certificate == VertexSet::of({0}));
  const SkewClass p7 = classify_skew(paley(7));
  CHECK(p7.tag == SkewTag::switch_of_doubly_regular);
  CHECK(p7.certificate == VertexSet());
  CHECK(classify_skew(counterexample7()).tag == SkewTag::other);
  CHECK(to_string(SkewTag::other) == "Other");

  // Non-transitive members of a transitive switching class are skew-monomorphic at every k.
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Tournament t = switch_tournament(transitive(7), VertexSet(rng() & 0x7F));
    CHECK(classify_skew(t).tag == SkewTag::switch_of_transitive);
    for (std::size_t k = 1; k <= 7; ++k) CHECK(spectral_monomorphy(t, k, Mode::skew).monomorphic());
  }
}
