#include "tmono/skew.hpp"

#include <bit>

#include "tmono/errors.hpp"

namespace tmono {

namespace {

void check_bound(std::size_t n, const char* who) {
  if (n > kMaxSwitchOrder) {
    throw UnsupportedError(std::string(who) + ": order " + std::to_string(n) + " exceeds the brute-force bound " +
                           std::to_string(kMaxSwitchOrder));
  }
}

// Out-rows of switch(t, X) written into `rows`.
void switched_rows(const Tournament& t, std::uint64_t x, std::vector<std::uint64_t>& rows) {
  const std::size_t n = t.order();
  const std::uint64_t all = VertexSet::all(n).mask();
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t across = ((x >> v) & 1U) ? (all & ~x) : x;
    rows[v] = (t.out_mask(v) & ~across) | (t.in_mask(v) & across);
  }
}

bool rows_transitive(const std::vector<std::uint64_t>& rows) {
  // Out-degrees of a transitive tournament are exactly 0..n-1.
  std::uint64_t seen = 0;
  for (std::uint64_t r : rows) seen |= std::uint64_t{1} << std::popcount(r);
  return seen == VertexSet::all(rows.size()).mask();
}

bool rows_doubly_regular(const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  if (n < 3 || n % 4 != 3) return false;
  for (std::uint64_t r : rows)
    if (static_cast<std::size_t>(std::popcount(r)) != (n - 1) / 2) return false;
  return is_doubly_regular(Tournament::from_out_rows(rows));
}

}  // namespace

IntMatrix skew_matrix(const Tournament& t) { return t.skew_principal(t.vertices()).cast<BigInt>(); }

bool is_skew_conference(const Tournament& t) {
  // Off the diagonal, (S^T S)_{ij} = (n-2) - 2 #{k : exactly one of k->i, k->j};
  // the diagonal is always n-1.
  const std::size_t n = t.order();
  if (n % 2 == 1 && n > 1) return false;  // a skew-symmetric matrix of odd order is singular
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t others = ~((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
      const auto disagree = static_cast<std::size_t>(std::popcount((t.in_mask(i) ^ t.in_mask(j)) & others));
      if (2 * disagree != n - 2) return false;
    }
  return true;
}

std::optional<VertexSet> find_switch(const Tournament& t, SwitchTarget target) {
  const std::size_t n = t.order();
  check_bound(n, "find_switch");
  std::vector<std::uint64_t> rows(n);
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t half = 0; half < limit; ++half) {
    const std::uint64_t x = half;  // vertex n-1 stays outside X
    switched_rows(t, x, rows);
    const bool hit = target == SwitchTarget::transitive ? rows_transitive(rows) : rows_doubly_regular(rows);
    if (hit) return VertexSet(x);
  }
  return std::nullopt;
}

bool are_switching_equivalent(const Tournament& a, const Tournament& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw PreconditionError("are_switching_equivalent: orders differ");
  check_bound(n, "are_switching_equivalent");
  std::vector<std::uint64_t> rows(n);
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t half = 0; half < limit; ++half) {
    switched_rows(a, half, rows);
    bool same = true;
    for (std::size_t v = 0; v < n && same; ++v) same = rows[v] == b.out_mask(v);
    if (same) return true;
  }
  return false;
}

std::string_view to_string(SkewTag tag) {
  switch (tag) {
    case SkewTag::switch_of_transitive: return "SwitchOfTransitive";
    case SkewTag::skew_conference: return "SkewConference";
    case SkewTag::switch_of_doubly_regular: return "SwitchOfDoublyRegular";
    case SkewTag::other: return "Other";
  }
  return "?";
}

SkewClass classify_skew(const Tournament& t) {
  check_bound(t.order(), "classify_skew");
  if (auto x = find_switch(t, SwitchTarget::transitive)) return {SkewTag::switch_of_transitive, x};
  if (is_skew_conference(t)) return {SkewTag::skew_conference, std::nullopt};
  if (auto x = find_switch(t, SwitchTarget::doubly_regular)) return {SkewTag::switch_of_doubly_regular, x};
  return {SkewTag::other, std::nullopt};
}

}  // namespace tmono
