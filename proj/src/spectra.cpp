#include "tmono/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

#include "tmono/errors.hpp"

namespace tmono {

std::string_view to_string(Mode mode) { return mode == Mode::adjacency ? "adjacency" : "skew"; }

std::string_view to_string(N2Class c) {
  switch (c) {
    case N2Class::transitive: return "Transitive";
    case N2Class::doubly_regular: return "DoublyRegular";
    case N2Class::not_monomorphic: return "NotMonomorphic";
  }
  return "?";
}

IntPoly principal_char_poly(const Tournament& t, VertexSet alpha, Mode mode) {
  return char_poly(mode == Mode::adjacency ? t.adjacency_principal(alpha) : t.skew_principal(alpha));
}

namespace {

void check_k(const Tournament& t, std::size_t k) {
  if (k < 1 || k > t.order()) {
    throw PreconditionError("k = " + std::to_string(k) + " outside 1.." + std::to_string(t.order()));
  }
}

struct Mismatch {
  std::uint64_t mask;
  IntPoly poly;
};

// First subset in [first_rank, last_rank) whose polynomial differs from
// `reference`. Gives up early once `best` (a mask already known to mismatch)
// is smaller than anything left in the range.
std::optional<Mismatch> scan_range(const Tournament& t, std::size_t k, Mode mode, const IntPoly& reference,
                                   std::uint64_t first_rank, std::uint64_t last_rank,
                                   const std::atomic<std::uint64_t>& best) {
  const std::size_t n = t.order();
  std::uint64_t mask = unrank_colex(first_rank, k);
  for (std::uint64_t r = first_rank; r < last_rank && mask != 0; ++r) {
    if (mask > best.load(std::memory_order_relaxed)) return std::nullopt;
    IntPoly p = principal_char_poly(t, VertexSet(mask), mode);
    if (p != reference) return Mismatch{mask, std::move(p)};
    mask = next_colex(mask, n);
  }
  return std::nullopt;
}

}  // namespace

void principal_char_polys(const Tournament& t, std::size_t k, Mode mode,
                          const std::function<bool(VertexSet, const IntPoly&)>& visit) {
  check_k(t, k);
  const std::size_t n = t.order();
  for (std::uint64_t mask = VertexSet::all(k).mask(); mask != 0; mask = next_colex(mask, n)) {
    if (!visit(VertexSet(mask), principal_char_poly(t, VertexSet(mask), mode))) return;
  }
}

MonomorphyVerdict spectral_monomorphy(const Tournament& t, std::size_t k, Mode mode, unsigned jobs) {
  check_k(t, k);
  MonomorphyVerdict verdict;
  verdict.k = k;
  verdict.mode = mode;

  const VertexSet first(VertexSet::all(k).mask());
  IntPoly reference = principal_char_poly(t, first, mode);
  const std::uint64_t total = choose(t.order(), k);

  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::optional<Mismatch> found;

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(jobs, 1U), total));
  if (workers <= 1) {
    found = scan_range(t, k, mode, reference, 1, total, best);
  } else {
    std::vector<std::optional<Mismatch>> partial(workers);
    std::vector<std::thread> pool;
    const std::uint64_t span = total - 1;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + span * w / workers;
      const std::uint64_t hi = 1 + span * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        partial[w] = scan_range(t, k, mode, reference, lo, hi, best);
        if (partial[w]) {
          std::uint64_t cur = best.load();
          while (partial[w]->mask < cur && !best.compare_exchange_weak(cur, partial[w]->mask)) {
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    // Colex-least mismatch wins.
    for (auto& p : partial)
      if (p && (!found || p->mask < found->mask)) found = std::move(p);
  }

  if (found) {
    verdict.witness = Witness{first, VertexSet(found->mask), std::move(reference), std::move(found->poly)};
  } else {
    verdict.common = std::move(reference);
  }
  return verdict;
}

RatPoly common_poly_via_derivative(const Tournament& t, std::size_t k, Mode mode) {
  check_k(t, k);
  const std::size_t n = t.order();
  // Sum of the k-subset polynomials, exact by the derivative identity.
  const IntPoly sum = exact_divide(derivative(char_poly(t, mode), n - k), factorial(n - k));
  return to_rational(sum) * make_rational(1, binomial(n, k));
}

BigInt superset_minor_sum(const IntMatrix& m, VertexSet beta, std::size_t p) {
  const std::size_t n = m.order();
  if (beta.bound() > n) throw PreconditionError("superset_minor_sum: beta has an index >= n");
  if (p < beta.size() || p > n) {
    throw PreconditionError("superset_minor_sum: p must satisfy |beta| <= p <= n");
  }
  const auto free = beta.complement_in(n).members();
  const std::size_t extra = p - beta.size();
  auto minor = [&](std::uint64_t mask) {
    const auto idx = VertexSet(mask).members();
    return det_exact(m.principal(idx));
  };
  if (extra == 0) return minor(beta.mask());
  BigInt sum = 0;
  for (std::uint64_t local = VertexSet::all(extra).mask(); local != 0; local = next_colex(local, free.size())) {
    std::uint64_t mask = beta.mask();
    for (std::uint64_t b = local; b != 0; b &= b - 1) mask |= std::uint64_t{1} << free[std::countr_zero(b)];
    sum += minor(mask);
  }
  return sum;
}

DoublyRegularPolys doubly_regular_polys(std::size_t n) {
  if (n % 4 != 3 || n < 7) throw PreconditionError("doubly_regular_polys: n must be 4t+3 with t >= 1");
  const long nn = static_cast<long>(n);
  auto q = [](long num, long den) { return make_rational(num, den); };
  const RatPoly base{q(nn + 1, 4), Rational(1), Rational(1)};  // z^2 + z + (n+1)/4

  DoublyRegularPolys out;
  out.full = to_integral(RatPoly{q(-(nn - 1), 2), Rational(1)} * pow(base, (n - 1) / 2));
  out.sub1 = to_integral(pow(base, (n - 3) / 2) * RatPoly{q(3 - nn, 4), q(3 - nn, 2), Rational(1)});
  out.sub2 = to_integral(pow(base, (n - 5) / 2) *
                         RatPoly{-q(nn - 3, 4), -q(nn - 5, 2), -q(nn - 5, 2), Rational(1)});
  return out;
}

IntPoly rn_poly(std::size_t n) {
  if (n < 3) throw PreconditionError("rn_poly: n must be >= 3");
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 3; k <= n; ++k) c[n - k] -= binomial(n - 2, k - 2);
  return IntPoly(std::move(c));
}

IntMatrix adjacency_matrix(const Tournament& t) { return t.adjacency().cast<BigInt>(); }

N2Class classify_n2(const Tournament& t) {
  const std::size_t n = t.order();
  if (n < 5) throw PreconditionError("classify_n2: requires n >= 5");
  N2Class structural = N2Class::not_monomorphic;
  if (is_transitive(t)) structural = N2Class::transitive;
  else if (is_doubly_regular(t)) structural = N2Class::doubly_regular;

  const bool spectral = spectral_monomorphy(t, n - 2, Mode::adjacency).monomorphic();
  if (spectral != (structural != N2Class::not_monomorphic)) {
    throw TheoremViolation("classify_n2: structural class " + std::string(to_string(structural)) +
                           " disagrees with the spectral verdict (" + (spectral ? "monomorphic" : "not monomorphic") +
                           ")");
  }
  return structural;
}

SubtournamentPolyTable::SubtournamentPolyTable(std::size_t n, std::size_t k, Mode mode) : n_(n), k_(k), mode_(mode) {
  if (k < 1 || k > 6) throw UnsupportedError("SubtournamentPolyTable: k must be in 1..6");
  if (n < k || n > 11) throw UnsupportedError("SubtournamentPolyTable: n must be in k..11");

  const std::uint64_t codes = std::uint64_t{1} << arc_code_bits(k);
  id_by_code_.resize(codes);
  std::map<IntPoly, std::uint32_t> interned;
  for (std::uint64_t code = 0; code < codes; ++code) {
    IntPoly p = char_poly(from_arc_code(k, code), mode);
    auto [it, inserted] = interned.try_emplace(p, static_cast<std::uint32_t>(distinct_.size()));
    if (inserted) distinct_.push_back(std::move(p));
    id_by_code_[code] = it->second;
  }

  for (std::uint64_t mask = VertexSet::all(k).mask(); mask != 0; mask = next_colex(mask, n)) {
    const auto v = VertexSet(mask).members();
    std::vector<std::uint8_t> bits;
    bits.reserve(arc_code_bits(k));
    for (std::size_t b = 1; b < k; ++b)
      for (std::size_t a = 0; a < b; ++a) bits.push_back(static_cast<std::uint8_t>(v[b] * (v[b] - 1) / 2 + v[a]));
    subsets_.push_back(std::move(bits));
  }
}

std::uint32_t SubtournamentPolyTable::subset_poly_id(std::uint64_t code, std::size_t subset_rank) const {
  const auto& bits = subsets_[subset_rank];
  std::uint64_t local = 0;
  for (std::size_t l = 0; l < bits.size(); ++l) local |= ((code >> bits[l]) & 1U) << l;
  return id_by_code_[local];
}

bool SubtournamentPolyTable::monomorphic(std::uint64_t code) const {
  const std::uint32_t first = subset_poly_id(code, 0);
  for (std::size_t r = 1; r < subsets_.size(); ++r)
    if (subset_poly_id(code, r) != first) return false;
  return true;
}

}  // namespace tmono
