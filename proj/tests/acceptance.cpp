// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout, wall-clock limits enforced where the criterion states one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tmono/census.hpp"
#include "tmono/random.hpp"
#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"
#include "tmono/verify.hpp"

using namespace tmono;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

IntPoly z_plus(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPoly(std::move(c));
}

Outcome eq4_instance() {
  Outcome o;
  const IntPoly expected = z_plus({-24, -28, -42, -21, -14, 0, 0, 1});
  const IntPoly built = z_plus({-3, 1}) * pow(z_plus({2, 1, 1}), 3);
  const IntPoly p = char_poly(paley(7));
  o.expect(p == expected, "char_poly(paley(7)) = " + format_human(p));
  o.expect(built == expected, "(z-3)(z^2+z+2)^3 = " + format_human(built));
  return o;
}

Outcome theorem1_forward() {
  Outcome o;
  const IntPoly expected = z_plus({2, 1, 1}) * z_plus({-1, -1, -1, 1});
  const MonomorphyVerdict v = spectral_monomorphy(paley(7), 5);
  o.expect(v.monomorphic(), "paley(7) is not 5-spectrally monomorphic");
  if (v.monomorphic()) o.expect(*v.common == expected, "common polynomial " + format_human(*v.common));
  const IntPoly avg = exact_divide(derivative(char_poly(paley(7)), 2), factorial(7) / factorial(5));
  o.expect(avg == expected, "(5!/7!) P'' = " + format_human(avg));
  return o;
}

Outcome n1_formula() {
  Outcome o;
  const IntPoly expected = pow(z_plus({2, 1, 1}), 2) * z_plus({-1, -2, 1});
  const MonomorphyVerdict v = spectral_monomorphy(paley(7), 6);
  o.expect(v.monomorphic(), "paley(7) is not 6-spectrally monomorphic");
  if (v.monomorphic()) o.expect(*v.common == expected, "common polynomial " + format_human(*v.common));
  return o;
}

Outcome theorem1_converse() {
  Outcome o;
  CensusParams p;
  p.n = 7;
  p.k = 5;
  p.question = CensusQuestion::theorem1;
  CensusOptions opts;
  opts.jobs = workers();
  const CensusReport r = run_census(p, opts);
  o.expect(r.complete && r.total == (1U << 21), "census incomplete");
  o.expect(r.exceptions.empty(), std::to_string(r.exceptions.size()) + " exceptions");
  const auto get = [&](const char* tag) { return r.class_counts.count(tag) ? r.class_counts.at(tag) : 0; };
  o.expect(get("transitive") == 5040, "transitive count " + std::to_string(get("transitive")));
  o.expect(r.monomorphic == get("transitive") + get("doubly_regular"), "monomorphic count mismatch");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("monomorphic ") + std::to_string(r.monomorphic) +
              " = 5040 transitive + " + std::to_string(get("doubly_regular")) + " doubly regular";
  return o;
}

Outcome prop3() {
  Outcome o;
  CensusParams p;
  p.n = 6;
  p.k = 3;
  p.question = CensusQuestion::prop3;
  const CensusReport r = run_census(p);
  o.expect(r.monomorphic == 720, "monomorphic " + std::to_string(r.monomorphic));
  o.expect(r.class_counts.count("transitive") && r.class_counts.at("transitive") == 720, "transitive count");
  o.expect(r.exceptions.empty(), "exceptions present");
  return o;
}

Outcome theorem2_n21() {
  Outcome o;
  const Tournament t = triple(paley(7), paley(7), counterexample7());
  const StructureReport s = structure_report(t);
  o.expect(t.order() == 21, "order");
  o.expect(s.is_regular, "not regular");
  for (std::size_t d : s.out_degrees) o.expect(d == 10, "out-degree " + std::to_string(d));
  const MonomorphyVerdict v = spectral_monomorphy(t, 20, Mode::adjacency, workers());
  o.expect(!v.monomorphic() && v.witness && v.witness->poly_alpha != v.witness->poly_beta, "no witness");
  return o;
}

Outcome counterexample() {
  Outcome o;
  const Tournament t = counterexample7();
  const StructureReport s = structure_report(t);
  o.expect(s.is_regular, "not regular");
  o.expect(!s.is_doubly_regular, "doubly regular");
  const bool adj = spectral_monomorphy(t, 6, Mode::adjacency).monomorphic();
  const bool skew = spectral_monomorphy(t, 6, Mode::skew).monomorphic();
  o.expect(!adj, "6-spectrally monomorphic");
  o.expect(!skew, "6-skew-spectrally monomorphic");
  o.expect(adj == skew, "adjacency and skew verdicts disagree");
  return o;
}

Outcome identity_suites() {
  Outcome o;
  VerifyOptions v;
  v.trials = 100;
  v.seed = 1;
  std::uint64_t checks = 0;
  for (const char* suite : {"eq1", "schwenk", "corollary1", "aat", "lemma1", "lemma2", "gregory", "prop11"}) {
    const VerifyResult r = run_verify(suite, v);
    checks += r.checks;
    o.expect(r.passed(), std::string(suite) + ": " + (r.failures.empty() ? "no checks" : r.failures.front()));
  }
  if (o.ok) o.detail = std::to_string(checks) + " exact checks";
  return o;
}

Outcome rn_family() {
  Outcome o;
  VerifyOptions v;
  const VerifyResult r = run_verify("rn", v);
  o.expect(r.passed(), r.failures.empty() ? "no checks" : r.failures.front());
  for (std::size_t n = 3; n <= 10; ++n) {
    const Tournament t = reversed_transitive(n);
    o.expect(char_poly(t) == rn_poly(n), "char poly of R_" + std::to_string(n));
    if (n < 4) continue;
    o.expect(spectral_monomorphy(t, n - 1, Mode::skew).monomorphic(), "R_n skew");
    o.expect(!spectral_monomorphy(t, n - 1, Mode::adjacency).monomorphic(), "R_n adjacency");
  }
  return o;
}

Outcome eq8_sign() {
  Outcome o;
  const Tournament c3 = paley(3);
  const IntPoly direct = char_poly(c3, Mode::skew);
  const IntPoly corrected = skew_from_adjacency_poly(char_poly(c3), 3);
  const IntPoly printed = skew_from_adjacency_poly(char_poly(c3), 3, Convention::as_printed);
  o.expect(direct == z_plus({0, 3, 0, 1}), "direct skew polynomial " + format_human(direct));
  o.expect(corrected == direct, "corrected sign gives " + format_human(corrected));
  o.expect(printed == z_plus({-9, 0, -3}), "printed sign gives " + format_human(printed));
  o.expect(printed != direct, "printed sign unexpectedly agrees");
  VerifyOptions v;
  const VerifyResult r = run_verify("gregory", v);
  o.expect(r.passed(), "gregory suite failed");
  if (o.ok) o.detail = "(-1)^n matches; (-1)^(n-1) gives " + format_human(printed) + " on the 3-cycle";
  return o;
}

Outcome hereditary() {
  Outcome o;
  std::uint64_t instances = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<std::optional<SubtournamentPolyTable>> tables(n + 1);
    for (std::size_t k = 1; k <= n; ++k) tables[k].emplace(n, k, Mode::adjacency);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << arc_code_bits(n)); ++code, ++instances) {
      std::vector<bool> mono(n + 1);
      for (std::size_t k = 1; k <= n; ++k) mono[k] = tables[k]->monomorphic(code);
      for (std::size_t k = 1; k <= n; ++k) {
        if (!mono[k]) continue;
        for (std::size_t l = 1; l <= std::min(k, n - k); ++l)
          if (!mono[l]) o.expect(false, "n=" + std::to_string(n) + " code " + std::to_string(code));
      }
    }
  }
  for (std::uint64_t seed = 1; seed <= 1000; ++seed, ++instances) {
    Rng rng(seed);
    const Tournament t = random_tournament(7, rng);
    std::vector<bool> mono(8);
    for (std::size_t k = 1; k <= 7; ++k) mono[k] = spectral_monomorphy(t, k).monomorphic();
    for (std::size_t k = 1; k <= 7; ++k) {
      if (!mono[k]) continue;
      for (std::size_t l = 1; l <= std::min<std::size_t>(k, 7 - k); ++l)
        if (!mono[l]) o.expect(false, "n=7 seed " + std::to_string(seed));
    }
  }
  if (o.ok) o.detail = std::to_string(instances) + " tournaments";
  return o;
}

Outcome problem1_probe() {
  Outcome o;
  const auto run = [&](std::size_t n, std::size_t k, CensusQuestion q) {
    CensusParams p;
    p.n = n;
    p.k = k;
    p.mode = Mode::skew;
    p.question = q;
    const CensusReport a = run_census(p);
    CensusOptions many;
    many.jobs = std::max(2U, workers());
    many.chunk_size = 5000;
    const CensusReport b = run_census(p, many);
    const std::string doc = census_to_json(a);
    o.expect(a.complete, "incomplete");
    o.expect(doc == census_to_json(b), std::string(to_string(q)) + ": report differs across job counts");
    o.expect(doc == census_to_json(run_census(p)), std::string(to_string(q)) + ": report differs across runs");
    std::uint64_t classified = 0;
    for (const auto& [tag, c] : a.class_counts)
      if (tag != "not_monomorphic" && tag != "exception") classified += c;
    const auto get = [&](const char* tag) { return a.class_counts.count(tag) ? a.class_counts.at(tag) : 0; };
    o.expect(classified + get("exception") + get("not_monomorphic") == a.total, "unaccounted instances");
    o.expect(a.exceptions.size() == get("exception"), "exception list and count disagree");
    o.expect(a.exceptions.empty() ? classified == a.monomorphic : classified <= a.monomorphic,
             "skew-monomorphic instances left unclassified");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string(to_string(q)) + ": " + std::to_string(a.monomorphic) +
                " skew-monomorphic, " + std::to_string(a.exceptions.size()) + " exceptions";
  };
  run(6, 4, CensusQuestion::problem1);
  run(7, 4, CensusQuestion::prop8);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no stated limit
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "paley(7) characteristic polynomial", 1, eq4_instance},
      {2, "paley(7) is 5-spectrally monomorphic; derivative cross-check", 1, theorem1_forward},
      {3, "paley(7) (n-1)-subtournament polynomial", 1, n1_formula},
      {4, "exhaustive n=7 census: transitive or doubly regular", 0, theorem1_converse},
      {5, "exhaustive n=6 census: 3-monomorphic means transitive", 60, prop3},
      {6, "n=21 triple is regular and not 20-spectrally monomorphic", 30, theorem2_n21},
      {7, "counterexample7 in both modes", 0, counterexample},
      {8, "identity suites, 100 random tournaments per order", 60, identity_suites},
      {9, "reversed transitive family n=3..10", 5, rn_family},
      {10, "skew conversion sign", 0, eq8_sign},
      {11, "hereditary property", 0, hereditary},
      {12, "skew censuses classify every instance deterministically", 0, problem1_probe},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("exceeded time limit");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing
              << (c.limit_seconds > 0 ? " < " + std::to_string(static_cast<int>(c.limit_seconds)) + "s" : "") << ")"
              << (out.detail.empty() ? "" : ": " + out.detail) << std::endl;
    failed += !out.ok;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
