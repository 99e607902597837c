// Exact checks of the polynomial identities relating a tournament's
// characteristic polynomials. Everything stays in integer polynomials by
// cross-multiplying.

#include <bit>

#include "tmono/errors.hpp"
#include "tmono/spectra.hpp"

namespace tmono {

namespace {

void require_regular(const Tournament& t, const char* who) {
  if (!is_regular(t)) throw PreconditionError(std::string(who) + ": tournament is not regular");
}

void require_vertex(const Tournament& t, std::size_t v, const char* who) {
  if (v >= t.order()) throw PreconditionError(std::string(who) + ": vertex out of range");
}

IntPoly deleted_poly(const Tournament& t, std::size_t v, Mode mode) {
  const VertexSet rest(t.vertices().mask() & ~(std::uint64_t{1} << v));
  if (rest.empty()) return IntPoly::constant(1);
  return principal_char_poly(t, rest, mode);
}

IntPoly z_linear(long a, long b) { return IntPoly::linear(BigInt(a), BigInt(b)); }

}  // namespace

IntPoly skew_from_adjacency_poly(const IntPoly& p, std::size_t n, Convention convention) {
  if (p.degree() != static_cast<long>(n) || !p.is_monic()) {
    throw PreconditionError("skew_from_adjacency_poly: polynomial must be monic of degree n");
  }
  if (n == 0) return p;
  const RatPoly rp = to_rational(p);
  const RatPoly shifted = affine_substitute_rational(rp, Rational(1, 2), Rational(-1, 2));    // P((z-1)/2)
  const RatPoly reflected = affine_substitute_rational(rp, Rational(-1, 2), Rational(-1, 2));  // P(-(z+1)/2)
  const bool n_even = n % 2 == 0;
  const bool plus = convention == Convention::corrected ? n_even : !n_even;
  RatPoly sum = plus ? shifted + reflected : shifted - reflected;
  sum *= Rational(pow2(n - 1));
  return to_integral(sum);
}

bool regular_deletion_identity(const Tournament& t, std::size_t i) {
  require_regular(t, "regular_deletion_identity");
  require_vertex(t, i, "regular_deletion_identity");
  const long n = static_cast<long>(t.order());
  const IntPoly pa = char_poly(t);
  const IntPoly pi = deleted_poly(t, i, Mode::adjacency);
  const IntPoly bracket = z_linear(2, n + 1) * pi + z_linear(-2, n - 1) * reflect_shift(pi);
  return pa * BigInt(4) == z_linear(2, 1 - n) * bracket;
}

bool lambda_shift_identity(const Tournament& t, const Rational& lambda) {
  const std::size_t n = t.order();
  RatMatrix m = t.adjacency().cast<Rational>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += lambda;
  const RatPoly shifted = char_poly_rational(m);

  const IntPoly pa = char_poly(t);
  const RatPoly pa_q = to_rational(pa);
  const RatPoly reflected = to_rational(reflect_shift(pa));
  const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  const RatPoly rhs = pa_q * Rational(lambda + 1) - reflected * Rational(sign * lambda);
  if (shifted != rhs) return false;

  if (is_regular(t)) {
    const Rational half_deg = make_rational(BigInt(static_cast<long>(n) - 1), BigInt(2));
    const RatPoly left = RatPoly::linear(Rational(1), Rational(-half_deg)) * shifted;
    const RatPoly right =
        RatPoly::linear(Rational(1), Rational(-Rational(static_cast<long>(n)) * lambda - half_deg)) * pa_q;
    if (left != right) return false;
  }
  return true;
}

bool skew_difference_identity(const Tournament& t, std::size_t i, std::size_t j, Convention convention) {
  require_regular(t, "skew_difference_identity");
  require_vertex(t, i, "skew_difference_identity");
  require_vertex(t, j, "skew_difference_identity");
  if (i == j) throw PreconditionError("skew_difference_identity: i and j must differ");
  const long n = static_cast<long>(t.order());
  const IntPoly da = deleted_poly(t, j, Mode::adjacency) - deleted_poly(t, i, Mode::adjacency);
  const IntPoly ds_raw = deleted_poly(t, j, Mode::skew) - deleted_poly(t, i, Mode::skew);
  const IntPoly ds = affine_substitute(ds_raw, 2, 1, 1, Rational(1));  // at 2z+1
  const IntPoly weight = IntPoly::linear(pow2(n), pow2(n - 1));      // 2^n z + 2^{n-1}
  const IntPoly shift = z_linear(2, 1 - n);                           // 2z - n + 1
  if (convention == Convention::corrected) return weight * da == shift * ds;
  return shift * da == weight * ds;
}

bool coefficient_minor_identity(const IntMatrix& m) {
  const std::size_t n = m.order();
  const IntPoly p = char_poly(m);
  if (p.degree() != static_cast<long>(n) || !p.is_monic()) return false;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt sum = superset_minor_sum(m, VertexSet(), k);
    if (k % 2 == 1) sum = -sum;
    if (p.coeff(n - k) != sum) return false;
  }
  return true;
}

bool derivative_sum_identity(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.order();
  if (k < 1 || k > n) throw PreconditionError("derivative_sum_identity: k outside 1..n");
  IntPoly sum;
  for (std::uint64_t mask = VertexSet::all(k).mask(); mask != 0; mask = next_colex(mask, n)) {
    const auto idx = VertexSet(mask).members();
    sum += char_poly(m.principal(idx));
  }
  return derivative(char_poly(m), n - k) == sum * factorial(n - k);
}

bool aat_identity(const Tournament& t) {
  const IntMatrix a = adjacency_matrix(t);
  const IntMatrix aat = a * a.transpose();
  const std::size_t n = t.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t expected = i == j ? t.out_degree(i) : pair_profile(t, i, j).common_out;
      if (aat(i, j) != static_cast<unsigned long>(expected)) return false;
    }
  return true;
}

bool doubly_regular_block_identity(const Tournament& t, std::size_t x, std::size_t y) {
  if (!is_doubly_regular(t)) throw PreconditionError("doubly_regular_block_identity: tournament is not doubly regular");
  require_vertex(t, x, "doubly_regular_block_identity");
  require_vertex(t, y, "doubly_regular_block_identity");
  if (x == y || !t.dominates(x, y)) throw PreconditionError("doubly_regular_block_identity: need an arc x -> y");
  const long tt = static_cast<long>(*structure_report(t).t);

  const std::uint64_t rest = t.vertices().mask() & ~(std::uint64_t{1} << x) & ~(std::uint64_t{1} << y);
  const std::uint64_t blocks[4] = {
      t.out_mask(x) & t.out_mask(y) & rest,
      t.in_mask(x) & t.out_mask(y) & rest,
      t.out_mask(x) & t.in_mask(y) & rest,
      t.in_mask(x) & t.in_mask(y) & rest,
  };
  const long expected_sizes[4] = {tt, tt + 1, tt, tt};
  std::vector<std::size_t> order;
  std::vector<int> block_of;
  for (int b = 0; b < 4; ++b) {
    if (std::popcount(blocks[b]) != expected_sizes[b]) return false;
    for (std::size_t v : VertexSet(blocks[b]).members()) {
      order.push_back(v);
      block_of.push_back(b);
    }
  }
  const IntMatrix a = adjacency_matrix(t);
  const IntMatrix b = a.principal(order);
  IntMatrix lhs = b * b.transpose();
  for (std::size_t i = 0; i < lhs.order(); ++i) lhs(i, i) -= tt + 1;

  static constexpr long offset[4][4] = {{0, 0, 0, 0}, {0, -1, 0, -1}, {0, 0, -1, -1}, {0, -1, -1, -2}};
  for (std::size_t i = 0; i < lhs.order(); ++i)
    for (std::size_t j = 0; j < lhs.order(); ++j)
      if (lhs(i, j) != tt + offset[block_of[i]][block_of[j]]) return false;
  return true;
}

}  // namespace tmono
