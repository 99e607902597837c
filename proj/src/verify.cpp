#include "tmono/verify.hpp"

#include <functional>
#include <map>

#include "tmono/census.hpp"
#include "tmono/errors.hpp"
#include "tmono/random.hpp"
#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"

namespace tmono {

namespace {

class Checker {
 public:
  explicit Checker(VerifyResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failures.size() < 50) r_.failures.push_back(what);
  }

  void note(std::string s) { r_.notes.push_back(std::move(s)); }

 private:
  VerifyResult& r_;
};

std::vector<std::size_t> orders(const VerifyOptions& o, std::size_t lo, std::size_t hi) {
  if (o.n) {
    if (*o.n < lo || *o.n > hi) {
      throw PreconditionError("--n must be in " + std::to_string(lo) + ".." + std::to_string(hi) + " for this suite");
    }
    return {*o.n};
  }
  std::vector<std::size_t> v;
  for (std::size_t n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

std::vector<std::size_t> odd_orders(const VerifyOptions& o, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t n : orders(o, lo, hi))
    if (n % 2 == 1) v.push_back(n);
  if (v.empty()) throw PreconditionError("this suite needs an odd order");
  return v;
}

std::string label(const Tournament& t) { return serialize(t); }

// Named regular tournaments plus random regular ones of each odd order.
std::vector<std::pair<std::string, Tournament>> regular_instances(const VerifyOptions& o, Rng& rng,
                                                                  std::size_t lo, std::size_t hi) {
  std::vector<std::pair<std::string, Tournament>> v;
  for (std::size_t n : odd_orders(o, lo, hi)) {
    if (n == 7) {
      v.emplace_back("paley(7)", paley(7));
      v.emplace_back("counterexample7", counterexample7());
    }
    if (n == 5) v.emplace_back("circulant(5,{1,2})", circulant(5, VertexSet::of({1, 2})));
    for (std::size_t i = 0; i < o.trials; ++i) {
      v.emplace_back("random circulant n=" + std::to_string(n), random_circulant(n, rng));
      v.emplace_back("random regular n=" + std::to_string(n), random_regular(n, rng));
    }
  }
  return v;
}

void suite_eq1(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  for (std::size_t n : orders(o, 3, 7)) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      const Tournament t = random_tournament(n, rng);
      const IntMatrix a = adjacency_matrix(t);
      c.check(coefficient_minor_identity(a), "coefficient/minor identity (adjacency):\n" + label(t));
      c.check(coefficient_minor_identity(skew_matrix(t)), "coefficient/minor identity (skew):\n" + label(t));
      const IntPoly p = char_poly(a);
      c.check(p.coeff(n - 1) == 0 && p.coeff(n - 2) == 0, "a1 = a2 = 0:\n" + label(t));
      c.check(-p.coeff(n - 3) == BigInt(static_cast<unsigned long>(three_cycle_count(t))),
              "-a3 = number of 3-cycles:\n" + label(t));
      const IntMatrix m = random_int_matrix(n, rng);
      c.check(coefficient_minor_identity(m), "coefficient/minor identity (random integer matrix)");
    }
  }
}

void suite_schwenk(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  for (std::size_t n : orders(o, 3, 7)) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      const Tournament t = random_tournament(n, rng);
      const IntMatrix m = random_int_matrix(n, rng);
      for (std::size_t k = 1; k <= n; ++k) {
        c.check(derivative_sum_identity(adjacency_matrix(t), k),
                "derivative identity k=" + std::to_string(k) + ":\n" + label(t));
        c.check(derivative_sum_identity(skew_matrix(t), k), "derivative identity (skew) k=" + std::to_string(k));
        c.check(derivative_sum_identity(m, k), "derivative identity (integer matrix) k=" + std::to_string(k));
      }
    }
  }
}

void check_corollary(Checker& c, const Tournament& t, std::size_t k, Mode mode, const std::string& name) {
  const MonomorphyVerdict v = spectral_monomorphy(t, k, mode);
  if (!v.monomorphic()) return;
  c.check(common_poly_via_derivative(t, k, mode) == to_rational(*v.common),
          "common polynomial = (k!/n!) P^(n-k) for " + name + " k=" + std::to_string(k));
}

void suite_corollary1(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  for (std::size_t p : {7UL, 11UL}) {
    for (std::size_t k = 1; k <= p; ++k) check_corollary(c, paley(p), k, Mode::adjacency, "paley(" + std::to_string(p) + ")");
  }
  for (std::size_t n = 3; n <= 9; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      check_corollary(c, transitive(n), k, Mode::adjacency, "transitive(" + std::to_string(n) + ")");
      check_corollary(c, reversed_transitive(n), k, Mode::skew, "reversed_transitive(" + std::to_string(n) + ")");
    }
  }
  for (std::size_t n : orders(o, 3, 7)) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      const Tournament t = random_tournament(n, rng);
      for (std::size_t k = 1; k <= n; ++k) {
        check_corollary(c, t, k, Mode::adjacency, "random");
        check_corollary(c, t, k, Mode::skew, "random (skew)");
      }
    }
  }
}

void suite_prop2(const VerifyOptions&, Checker& c) {
  // Doubly regular tournaments are (n-2)-spectrally monomorphic; for |beta| <= 2
  // the superset minor sums may depend only on |beta|.
  for (std::size_t p : {7UL, 11UL}) {
    const Tournament t = paley(p);
    const std::size_t k = p - 2;
    const IntMatrix a = adjacency_matrix(t);
    for (std::size_t size = 0; size <= p - k; ++size) {
      for (std::size_t q = std::max<std::size_t>(size, 1); q <= k; ++q) {
        std::optional<BigInt> first;
        bool constant = true;
        const std::uint64_t start = size == 0 ? 0 : VertexSet::all(size).mask();
        for (std::uint64_t beta = start;; beta = next_colex(beta, p)) {
          const BigInt s = superset_minor_sum(a, VertexSet(beta), q);
          if (!first) first = s;
          else if (s != *first) constant = false;
          if (size == 0) break;
          if (next_colex(beta, p) == 0) break;
        }
        c.check(constant, "paley(" + std::to_string(p) + "): superset minor sum depends on beta for |beta|=" +
                              std::to_string(size) + " p=" + std::to_string(q));
      }
    }
    // Pair sums at p=3 count 3-cycles through the pair: t+1.
    const std::size_t tt = (p - 3) / 4;
    c.check(superset_minor_sum(a, VertexSet::of({0, 1}), 3) == BigInt(static_cast<unsigned long>(tt + 1)),
            "pair minor sum at p=3 equals t+1");
  }
}

void suite_aat(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  for (std::size_t n : orders(o, 3, 12))
    for (std::size_t i = 0; i < o.trials; ++i) {
      const Tournament t = random_tournament(n, rng);
      c.check(aat_identity(t), "A A^T identity:\n" + label(t));
    }
  c.check(aat_identity(paley(7)), "A A^T identity for paley(7)");
}

void suite_lemma1(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  for (const auto& [name, t] : regular_instances(o, rng, 3, 11))
    for (std::size_t i = 0; i < t.order(); ++i)
      c.check(regular_deletion_identity(t, i), "deletion identity for " + name + " at vertex " + std::to_string(i));
}

void suite_lemma2(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  const Rational lambdas[] = {Rational(1), Rational(2), make_rational(-1, 2), make_rational(1, 3)};
  for (std::size_t n : orders(o, 3, 7)) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      const Tournament t = random_tournament(n, rng);
      for (const auto& l : lambdas)
        c.check(lambda_shift_identity(t, l), "lambda identity l=" + to_string(l) + ":\n" + label(t));
    }
  }
  for (const auto& [name, t] : regular_instances(o, rng, 3, 9))
    for (const auto& l : lambdas)
      c.check(lambda_shift_identity(t, l), "lambda identity (regular) for " + name + " l=" + to_string(l));
}

void suite_gregory(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  std::size_t printed_failures = 0, instances = 0;
  for (std::size_t n : orders(o, 2, 10)) {
    for (std::size_t i = 0; i < o.trials; ++i) {
      const Tournament t = random_tournament(n, rng);
      const IntPoly direct = char_poly(t, Mode::skew);
      const IntPoly pa = char_poly(t);
      c.check(skew_from_adjacency_poly(pa, n) == direct, "corrected sign disagrees with direct skew kernel:\n" + label(t));
      ++instances;
      if (skew_from_adjacency_poly(pa, n, Convention::as_printed) != direct) ++printed_failures;
    }
  }
  const Tournament cyc = paley(3);
  const IntPoly printed = skew_from_adjacency_poly(char_poly(cyc), 3, Convention::as_printed);
  c.check(char_poly(cyc, Mode::skew) == IntPoly{0, 3, 0, 1}, "3-cycle skew polynomial is z^3 + 3z");
  c.check(printed == IntPoly{-9, 0, -3}, "printed sign on the 3-cycle gives -3z^2 - 9");
  c.check(printed != char_poly(cyc, Mode::skew), "printed sign must fail on the 3-cycle");
  c.note("printed sign disagreed with the direct skew polynomial on " + std::to_string(printed_failures) + " of " +
         std::to_string(instances) + " random instances");
}

void suite_prop11(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  std::size_t nonzero = 0;
  for (const auto& [name, t] : regular_instances(o, rng, 3, 9)) {
    const std::size_t n = t.order();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        c.check(skew_difference_identity(t, i, j),
                "difference identity for " + name + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (principal_char_poly(t, VertexSet(t.vertices().mask() & ~(1ULL << i)), Mode::adjacency) !=
            principal_char_poly(t, VertexSet(t.vertices().mask() & ~(1ULL << j)), Mode::adjacency))
          ++nonzero;
      }
  }
  // The printed orientation only survives when both differences vanish.
  const Tournament ce = counterexample7();
  c.check(skew_difference_identity(ce, 0, 1), "corrected identity on counterexample7 (0,1)");
  c.check(!skew_difference_identity(ce, 0, 1, Convention::as_printed),
          "printed orientation must fail on counterexample7 (0,1)");
  c.note("pairs with distinct deleted polynomials: " + std::to_string(nonzero));
}

void suite_theorem1(const VerifyOptions& o, Checker& c) {
  const std::size_t n = o.n.value_or(7);
  if (n < 5 || n > 7) throw PreconditionError("theorem1: --n must be in 5..7 (exhaustive census)");
  CensusParams p;
  p.n = n;
  p.k = n - 2;
  p.question = CensusQuestion::theorem1;
  CensusOptions opts;
  opts.jobs = o.jobs;
  const CensusReport r = run_census(p, opts);
  c.check(r.exceptions.empty(), "census found " + std::to_string(r.exceptions.size()) + " exceptions");
  std::uint64_t nfact = 1;
  for (std::size_t i = 2; i <= n; ++i) nfact *= i;
  c.check(r.class_counts.count("transitive") && r.class_counts.at("transitive") == nfact,
          "labeled transitive count is n!");
  const std::uint64_t dr = r.class_counts.count("doubly_regular") ? r.class_counts.at("doubly_regular") : 0;
  c.check(r.monomorphic == nfact + dr, "monomorphic = transitive + doubly regular");
  c.note("n=" + std::to_string(n) + ": " + std::to_string(r.monomorphic) + " monomorphic (" + std::to_string(nfact) +
         " transitive, " + std::to_string(dr) + " doubly regular) of " + std::to_string(r.total));

  for (std::size_t q : {7UL, 11UL, 19UL}) {
    const Tournament t = paley(q);
    const DoublyRegularPolys polys = doubly_regular_polys(q);
    const std::string name = "paley(" + std::to_string(q) + ")";
    c.check(char_poly(t) == polys.full, name + ": characteristic polynomial matches the closed form");
    const MonomorphyVerdict v2 = spectral_monomorphy(t, q - 2, Mode::adjacency, o.jobs);
    c.check(v2.monomorphic() && *v2.common == polys.sub2, name + ": (n-2)-subtournament polynomial");
    const MonomorphyVerdict v1 = spectral_monomorphy(t, q - 1, Mode::adjacency, o.jobs);
    c.check(v1.monomorphic() && *v1.common == polys.sub1, name + ": (n-1)-subtournament polynomial");
    if (q <= 11) c.check(classify_n2(t) == N2Class::doubly_regular, name + ": classify_n2");
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = 0; y < q; ++y)
        if (x != y && t.dominates(x, y))
          c.check(doubly_regular_block_identity(t, x, y), name + ": block identity for arc " + std::to_string(x) +
                                                              "->" + std::to_string(y));
  }
  for (std::size_t m = 5; m <= 9; ++m) c.check(classify_n2(transitive(m)) == N2Class::transitive, "classify_n2 transitive");
  c.check(classify_n2(counterexample7()) == N2Class::not_monomorphic, "classify_n2 counterexample7");
}

void suite_theorem2(const VerifyOptions& o, Checker& c) {
  const std::size_t n = o.n.value_or(21);
  Tournament t = paley(3);
  if (n == 21) {
    t = triple(paley(7), paley(7), counterexample7());
  } else if (n == 63) {
    if (!o.allow_large) throw PreconditionError("theorem2 at n=63 needs --allow-large");
    const Tournament good = triple(paley(7), paley(7), paley(7));
    const Tournament bad = triple(paley(7), paley(7), counterexample7());
    t = triple(good, good, bad);
  } else {
    throw PreconditionError("theorem2: --n must be 21 or 63");
  }
  const StructureReport s = structure_report(t);
  c.check(s.is_regular, "triple is regular");
  bool degrees = true;
  for (std::size_t d : s.out_degrees) degrees = degrees && d == (n - 1) / 2;
  c.check(degrees, "every out-degree is (n-1)/2");
  const MonomorphyVerdict v = spectral_monomorphy(t, n - 1, Mode::adjacency, o.jobs);
  c.check(!v.monomorphic(), "triple is not (n-1)-spectrally monomorphic");
  if (v.witness) {
    c.check(v.witness->poly_alpha != v.witness->poly_beta, "witness polynomials differ");
    c.note("witness " + v.witness->alpha.to_string() + " vs " + v.witness->beta.to_string());
  }
  if (n == 21) {
    const MonomorphyVerdict vs = spectral_monomorphy(t, n - 1, Mode::skew, o.jobs);
    c.check(!vs.monomorphic(), "triple is not (n-1)-skew-spectrally monomorphic either");
  }
}

void suite_rn(const VerifyOptions& o, Checker& c) {
  for (std::size_t n : orders(o, 3, 12)) {
    const Tournament r = reversed_transitive(n);
    const std::string name = "R_" + std::to_string(n);
    c.check(char_poly(r) == rn_poly(n), name + ": characteristic polynomial");
    c.check(det_exact(adjacency_matrix(r)) == (n % 2 == 1 ? 1 : -1), name + ": det A = (-1)^(n+1)");
    c.check(spectral_monomorphy(r, n - 1, Mode::skew).monomorphic(), name + ": (n-1)-skew-spectrally monomorphic");
    const auto x = find_switch(r, SwitchTarget::transitive);
    c.check(x.has_value(), name + ": some switch is transitive");
    if (n < 4) continue;
    for (std::size_t v = 0; v < n; ++v) {
      const IntPoly p = principal_char_poly(r, VertexSet(r.vertices().mask() & ~(1ULL << v)), Mode::adjacency);
      const bool end = v == 0 || v == n - 1;
      c.check(p == (end ? IntPoly::monomial(1, n - 1) : rn_poly(n - 1)),
              name + ": deleting vertex " + std::to_string(v));
    }
    c.check(!spectral_monomorphy(r, n - 1, Mode::adjacency).monomorphic(), name + ": not (n-1)-spectrally monomorphic");
  }
}

void suite_main3(const VerifyOptions& o, Checker& c) {
  Rng rng(o.seed);
  auto instances = regular_instances(o, rng, 3, 11);
  if (!o.n) {
    for (std::uint64_t pick = 0; pick < 16; ++pick) {
      std::uint64_t symbols = 0;
      for (std::size_t s = 1; s <= 4; ++s) symbols |= std::uint64_t{1} << (((pick >> (s - 1)) & 1U) ? s : 9 - s);
      instances.emplace_back("circulant(9)", circulant(9, VertexSet(symbols)));
    }
    instances.emplace_back("triple(paley7,paley7,counterexample7)", triple(paley(7), paley(7), counterexample7()));
    instances.emplace_back("triple(paley7 x3)", triple(paley(7), paley(7), paley(7)));
  }
  std::size_t agreeing_negative = 0;
  for (const auto& [name, t] : instances) {
    const std::size_t n = t.order();
    const bool adj = spectral_monomorphy(t, n - 1, Mode::adjacency, o.jobs).monomorphic();
    const bool sk = spectral_monomorphy(t, n - 1, Mode::skew, o.jobs).monomorphic();
    c.check(adj == sk, name + ": adjacency and skew (n-1)-verdicts differ");
    if (!adj && !sk) ++agreeing_negative;
  }
  c.note(std::to_string(instances.size()) + " regular instances, " + std::to_string(agreeing_negative) +
         " not (n-1)-monomorphic in either mode");
}

using SuiteFn = void (*)(const VerifyOptions&, Checker&);

const std::map<std::string_view, SuiteFn>& suites() {
  static const std::map<std::string_view, SuiteFn> table = {
      {"eq1", suite_eq1},         {"schwenk", suite_schwenk}, {"corollary1", suite_corollary1},
      {"prop2", suite_prop2},     {"aat", suite_aat},         {"lemma1", suite_lemma1},
      {"lemma2", suite_lemma2},   {"gregory", suite_gregory}, {"prop11", suite_prop11},
      {"theorem1", suite_theorem1}, {"theorem2", suite_theorem2}, {"rn", suite_rn},
      {"main3", suite_main3},
  };
  return table;
}

}  // namespace

const std::vector<std::string_view>& verify_suite_names() {
  static const std::vector<std::string_view> names = {"eq1",    "schwenk", "corollary1", "prop2",    "aat",
                                                      "lemma1", "lemma2",  "gregory",    "prop11",   "theorem1",
                                                      "theorem2", "rn",    "main3"};
  return names;
}

VerifyResult run_verify(std::string_view suite, const VerifyOptions& options) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw PreconditionError("unknown verify suite '" + std::string(suite) + "'");
  VerifyResult r;
  r.suite = std::string(suite);
  Checker c(r);
  it->second(options, c);
  return r;
}

}  // namespace tmono
