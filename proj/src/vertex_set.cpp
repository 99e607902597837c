#include "tmono/vertex_set.hpp"

#include "tmono/errors.hpp"

namespace tmono {

VertexSet VertexSet::of(std::span<const std::size_t> members) {
  std::uint64_t mask = 0;
  for (std::size_t v : members) {
    if (v >= kMaxVertices) throw PreconditionError("vertex index " + std::to_string(v) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit) throw PreconditionError("duplicate vertex " + std::to_string(v));
    mask |= bit;
  }
  return VertexSet(mask);
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t v : members()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(v);
  }
  return s + "}";
}

std::uint64_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t unrank_colex(std::uint64_t rank, std::size_t k) {
  std::uint64_t mask = 0;
  for (std::size_t i = k; i >= 1; --i) {
    std::size_t c = i - 1;
    while (choose(c + 1, i) <= rank) ++c;
    mask |= std::uint64_t{1} << c;
    rank -= choose(c, i);
  }
  return mask;
}

}  // namespace tmono
