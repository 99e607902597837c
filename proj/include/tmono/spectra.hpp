#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tmono/matrix.hpp"
#include "tmono/poly.hpp"
#include "tmono/tournament.hpp"
#include "tmono/vertex_set.hpp"

namespace tmono {

enum class Mode { adjacency, skew };

std::string_view to_string(Mode mode);

// Characteristic polynomial of A (or S = A - A^T) restricted to alpha.
IntPoly principal_char_poly(const Tournament& t, VertexSet alpha, Mode mode);

inline IntPoly char_poly(const Tournament& t, Mode mode = Mode::adjacency) {
  return principal_char_poly(t, t.vertices(), mode);
}

// Streams every k-subset in colex order with its characteristic polynomial.
// The callback returns false to stop early. Throws PreconditionError unless
// 1 <= k <= n.
void principal_char_polys(const Tournament& t, std::size_t k, Mode mode,
                          const std::function<bool(VertexSet, const IntPoly&)>& visit);

struct Witness {
  VertexSet alpha;
  VertexSet beta;
  IntPoly poly_alpha;
  IntPoly poly_beta;
};

struct MonomorphyVerdict {
  std::size_t k = 0;
  Mode mode = Mode::adjacency;
  std::optional<IntPoly> common;   // present iff monomorphic
  std::optional<Witness> witness;  // present iff not

  bool monomorphic() const noexcept { return common.has_value(); }
};

// All k x k principal submatrices share one characteristic polynomial? The
// witness pairs the colex-first subset with the colex-first subset whose
// polynomial differs from it; the result does not depend on `jobs`.
MonomorphyVerdict spectral_monomorphy(const Tournament& t, std::size_t k, Mode mode = Mode::adjacency,
                                      unsigned jobs = 1);

// (k!/n!) * P^{(n-k)}, the average k-subset polynomial. Equals the common
// polynomial whenever t is k-spectrally monomorphic; only (n-k)! is
// guaranteed to divide the derivative, so in general the average is rational.
RatPoly common_poly_via_derivative(const Tournament& t, std::size_t k, Mode mode = Mode::adjacency);

// sum of det M[alpha] over all p-subsets alpha containing beta.
BigInt superset_minor_sum(const IntMatrix& m, VertexSet beta, std::size_t p);

struct DoublyRegularPolys {
  IntPoly full;  // degree n
  IntPoly sub1;  // every (n-1)-subtournament
  IntPoly sub2;  // every (n-2)-subtournament
};

// Closed forms for a doubly regular n-tournament, n = 4t+3 >= 7.
DoublyRegularPolys doubly_regular_polys(std::size_t n);

// z^n - sum_{k=3}^{n} C(n-2, k-2) z^{n-k}
IntPoly rn_poly(std::size_t n);

// Which sign / orientation to use where the printed formulas and the direct
// computation disagree. `as_printed` exists only so the disagreement can be
// demonstrated.
enum class Convention { corrected, as_printed };

// 2^{n-1} [P((z-1)/2) + s P(-(z+1)/2)] with s = (-1)^n (corrected) or
// (-1)^{n-1} (as printed). Throws PreconditionError unless P is monic of
// degree n, IntegralityError if the result is not integral.
IntPoly skew_from_adjacency_poly(const IntPoly& p, std::size_t n, Convention convention = Convention::corrected);

// Regular t: 4 P_A = (2z-n+1) [(2z+n+1) P_{A_i}(z) + (n-2z-1) P_{A_i}(-z-1)].
bool regular_deletion_identity(const Tournament& t, std::size_t i);

// P_{A+lJ} = (l+1) P_A(z) - (-1)^n l P_A(-z-1), and for regular t also
// (z-(n-1)/2) P_{A+lJ} = (z-nl-(n-1)/2) P_A.
bool lambda_shift_identity(const Tournament& t, const Rational& lambda);

// Regular t, i != j. With D = P_{A_j} - P_{A_i} and E = P_{S_j}(2z+1) - P_{S_i}(2z+1):
//   corrected:  (2^n z + 2^{n-1}) D = (2z - n + 1) E
//   as printed: (2z - n + 1) D = (2^n z + 2^{n-1}) E
bool skew_difference_identity(const Tournament& t, std::size_t i, std::size_t j,
                              Convention convention = Convention::corrected);

// a_k = (-1)^k sum_{|alpha|=k} det M[alpha] for every k, with the minors taken
// by Bareiss and the coefficients by Berkowitz.
bool coefficient_minor_identity(const IntMatrix& m);

// P^{(n-k)} = (n-k)! sum_{|alpha|=k} P_{M[alpha]} for the given k.
bool derivative_sum_identity(const IntMatrix& m, std::size_t k);

// A A^T has out-degrees on the diagonal and pair out-degrees elsewhere.
bool aat_identity(const Tournament& t);

// Doubly regular t with x -> y: the tournament on V - {x,y}, ordered by the
// blocks N+(x)&N+(y), N-(x)&N+(y), N+(x)&N-(y), N-(x)&N-(y), has
// B B^T - (t+1) I equal to the constant-block matrix with entries
//   t   t   t   t
//   t  t-1  t  t-1
//   t   t  t-1 t-1
//   t  t-1 t-1 t-2
bool doubly_regular_block_identity(const Tournament& t, std::size_t x, std::size_t y);

enum class N2Class { transitive, doubly_regular, not_monomorphic };

std::string_view to_string(N2Class c);

// Structural decision of (n-2)-spectral monomorphy, cross-checked against the
// spectral decider. Throws PreconditionError for n < 5 and TheoremViolation
// if the two disagree.
N2Class classify_n2(const Tournament& t);

IntMatrix adjacency_matrix(const Tournament& t);

// Exact polynomials of every labeled k-tournament, indexed by arc code and
// interned to small ids. Answers k-monomorphy of an n-tournament given by its
// arc code without touching big integers in the hot loop. k <= 6, n <= 11.
class SubtournamentPolyTable {
 public:
  SubtournamentPolyTable(std::size_t n, std::size_t k, Mode mode);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  Mode mode() const noexcept { return mode_; }

  // Poly id of the subtournament on the rank-th colex k-subset.
  std::uint32_t subset_poly_id(std::uint64_t code, std::size_t subset_rank) const;

  bool monomorphic(std::uint64_t code) const;

  const IntPoly& poly(std::uint32_t id) const { return distinct_[id]; }
  std::size_t distinct_count() const noexcept { return distinct_.size(); }
  std::size_t subset_count() const noexcept { return subsets_.size(); }

 private:
  std::size_t n_, k_;
  Mode mode_;
  std::vector<std::uint32_t> id_by_code_;
  std::vector<IntPoly> distinct_;
  // Per colex subset: global arc-code bit index of each local pair.
  std::vector<std::vector<std::uint8_t>> subsets_;
};

}  // namespace tmono
