#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmono/matrix.hpp"
#include "tmono/vertex_set.hpp"

namespace tmono {

// Labeled tournament on vertices 0..n-1. Row i of the dominance relation is a
// bitmask of the out-neighbourhood of i. Immutable; every constructor path
// validates the two tournament invariants.
class Tournament {
 public:
  // Throws PreconditionError when out_rows violates an invariant.
  static Tournament from_out_rows(std::vector<std::uint64_t> out_rows);

  // 0/1 matrix, row i column j = 1 iff i dominates j.
  static Tournament from_adjacency(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return out_.size(); }

  bool dominates(std::size_t i, std::size_t j) const noexcept { return (out_[i] >> j) & 1U; }

  std::uint64_t out_mask(std::size_t v) const noexcept { return out_[v]; }
  std::uint64_t in_mask(std::size_t v) const noexcept { return in_[v]; }

  std::size_t out_degree(std::size_t v) const noexcept;
  std::size_t in_degree(std::size_t v) const noexcept;

  VertexSet vertices() const noexcept { return VertexSet::all(order()); }

  // Adjacency matrix A.
  SmallIntMatrix adjacency() const;

  // Principal submatrix A[alpha] or S[alpha] with S = A - A^T, built straight
  // from the bit rows.
  SmallIntMatrix adjacency_principal(VertexSet alpha) const;
  SmallIntMatrix skew_principal(VertexSet alpha) const;

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.out_ == b.out_; }

 private:
  explicit Tournament(std::vector<std::uint64_t> out_rows);

  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// Text format: decimal n on the first line, then n rows of n characters from
// {0,1}. Lines end with LF; no other whitespace is accepted. A final LF after
// the last row is optional on input and always written on output.
Tournament parse_tournament(std::string_view text);
std::string serialize(const Tournament& t);

// dom(i,j) = 1 iff i < j.
Tournament transitive(std::size_t n);

// Quadratic residue tournament on Z_p, p prime and p = 3 (mod 4):
// x -> y iff x - y is a nonzero square.
Tournament paley(std::size_t p);

// x -> y iff (y - x) mod n is in `symbols`; symbols and their negatives must
// partition {1..n-1}.
Tournament circulant(std::size_t n, VertexSet symbols);

// The regular 7-tournament that is not 6-spectrally monomorphic.
Tournament counterexample7();

// transitive(n) with the arc 0 -> n-1 reversed.
Tournament reversed_transitive(std::size_t n);

// Reverse every arc between x and its complement.
Tournament switch_tournament(const Tournament& t, VertexSet x);

// Three regular n-tournaments glued with block 1 -> block 2 -> block 3 -> block 1.
Tournament triple(const Tournament& t1, const Tournament& t2, const Tournament& t3);

// Induced subtournament on alpha, index order preserved.
Tournament subtournament(const Tournament& t, VertexSet alpha);

struct PairProfile {
  std::size_t common_out;  // |N+(x) & N+(y)|
  std::size_t common_in;   // |N-(x) & N-(y)|
  std::size_t out_in;      // |N+(x) & N-(y)|
  std::size_t in_out;      // |N-(x) & N+(y)|

  friend bool operator==(const PairProfile&, const PairProfile&) = default;
};

PairProfile pair_profile(const Tournament& t, std::size_t x, std::size_t y);

// Number of 3-cycles through the pair {x, y}.
std::size_t pair_three_cycles(const Tournament& t, std::size_t x, std::size_t y);

struct StructureReport {
  std::vector<std::size_t> out_degrees;
  bool is_transitive = false;
  bool is_regular = false;
  bool is_near_regular = false;
  bool is_doubly_regular = false;
  bool is_homogeneous = false;
  std::optional<std::size_t> t;  // common pair out-degree when doubly regular
  std::uint64_t three_cycle_count = 0;
};

StructureReport structure_report(const Tournament& t);

// C(n,3) - sum_v C(outdeg v, 2)
std::uint64_t three_cycle_count(const Tournament& t);

// Arc code: bit j(j-1)/2 + i (i < j) is set iff i dominates j. Pairs are
// ordered colexicographically, so the subtournament on {0..m-1} occupies the
// low C(m,2) bits. Requires n <= 11.
std::uint64_t arc_code(const Tournament& t);
Tournament from_arc_code(std::size_t n, std::uint64_t code);

// Number of bits an arc code for n vertices uses.
constexpr std::size_t arc_code_bits(std::size_t n) { return n * (n - 1) / 2; }

bool is_transitive(const Tournament& t);
bool is_regular(const Tournament& t);
bool is_doubly_regular(const Tournament& t);

}  // namespace tmono
