#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tmono {

// Largest vertex count a Tournament can hold (one 64-bit word per row).
inline constexpr std::size_t kMaxVertices = 64;

// Subset of vertex indices, stored as a bitmask. Among sets of equal size,
// numeric order of the mask is colexicographic order of the members.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

  // Throws PreconditionError for duplicate or out-of-range (>= 64) members.
  static VertexSet of(std::span<const std::size_t> members);
  static VertexSet of(std::initializer_list<std::size_t> members) {
    return of(std::span<const std::size_t>(members.begin(), members.size()));
  }

  // {0, ..., n-1}
  static constexpr VertexSet all(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(std::size_t v) const noexcept { return v < 64 && ((mask_ >> v) & 1U); }

  // Strictly increasing member list.
  std::vector<std::size_t> members() const;

  // Largest member + 1, or 0 for the empty set.
  constexpr std::size_t bound() const noexcept {
    return mask_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(mask_));
  }

  constexpr VertexSet complement_in(std::size_t n) const { return VertexSet(all(n).mask_ & ~mask_); }

  // "{0,3,5}"
  std::string to_string() const;

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.mask_ < b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

// Next k-subset in colex order after `mask` (Gosper's hack). Returns 0 past
// the last subset of {0..n-1}.
constexpr std::uint64_t next_colex(std::uint64_t mask, std::size_t n) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  if (r == 0) return 0;  // wrapped past bit 63
  const std::uint64_t next = (((r ^ mask) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return 0;
  return next;
}

// The `rank`-th k-subset of {0..} in colex order (combinatorial number system).
std::uint64_t unrank_colex(std::uint64_t rank, std::size_t k);

// C(n, k) as uint64_t. Caller guarantees it fits.
std::uint64_t choose(std::size_t n, std::size_t k);

}  // namespace tmono
