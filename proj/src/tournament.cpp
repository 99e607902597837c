#include "tmono/tournament.hpp"

#include <bit>
#include <charconv>

#include "tmono/errors.hpp"

namespace tmono {

namespace {

std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

void check_order(std::size_t n, const char* who) {
  if (n > kMaxVertices) {
    throw UnsupportedError(std::string(who) + ": " + std::to_string(n) + " vertices exceeds the limit of " +
                           std::to_string(kMaxVertices));
  }
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Smallest prime factor q when p = q^r with r >= 2, else 0.
std::size_t prime_power_base(std::size_t p) {
  for (std::size_t q = 2; q * q <= p; ++q) {
    if (p % q != 0) continue;
    std::size_t m = p;
    while (m % q == 0) m /= q;
    return m == 1 ? q : 0;
  }
  return 0;
}

}  // namespace

Tournament::Tournament(std::vector<std::uint64_t> out_rows) : out_(std::move(out_rows)), in_(out_.size(), 0) {
  const std::size_t n = out_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t m = out_[i]; m != 0; m &= m - 1) in_[std::countr_zero(m)] |= std::uint64_t{1} << i;
}

Tournament Tournament::from_out_rows(std::vector<std::uint64_t> out_rows) {
  const std::size_t n = out_rows.size();
  if (n == 0) throw PreconditionError("a tournament needs at least one vertex");
  check_order(n, "tournament");
  const std::uint64_t all = VertexSet::all(n).mask();
  for (std::size_t i = 0; i < n; ++i) {
    if (out_rows[i] & ~all) throw PreconditionError("row " + std::to_string(i) + " has an arc to a missing vertex");
    if ((out_rows[i] >> i) & 1U) throw PreconditionError("loop at vertex " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const unsigned both = static_cast<unsigned>((out_rows[i] >> j) & 1U) + static_cast<unsigned>((out_rows[j] >> i) & 1U);
      if (both != 1) {
        throw PreconditionError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                                (both == 0 ? "no arc" : "two arcs"));
      }
    }
  return Tournament(std::move(out_rows));
}

Tournament Tournament::from_adjacency(const std::vector<std::vector<int>>& rows) {
  std::vector<std::uint64_t> out(rows.size(), 0);
  check_order(rows.size(), "tournament");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw PreconditionError("adjacency matrix is not square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw PreconditionError("adjacency entries must be 0 or 1");
      if (rows[i][j]) out[i] |= std::uint64_t{1} << j;
    }
  }
  return from_out_rows(std::move(out));
}

std::size_t Tournament::out_degree(std::size_t v) const noexcept { return popcount(out_[v]); }
std::size_t Tournament::in_degree(std::size_t v) const noexcept { return popcount(in_[v]); }

SmallIntMatrix Tournament::adjacency() const { return adjacency_principal(vertices()); }

SmallIntMatrix Tournament::adjacency_principal(VertexSet alpha) const {
  const auto idx = alpha.members();
  SmallIntMatrix m(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = dominates(idx[a], idx[b]) ? 1 : 0;
  return m;
}

SmallIntMatrix Tournament::skew_principal(VertexSet alpha) const {
  const auto idx = alpha.members();
  SmallIntMatrix m(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (a == b) continue;
      m(a, b) = dominates(idx[a], idx[b]) ? 1 : -1;
    }
  return m;
}

Tournament parse_tournament(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty input: missing header line");

  const std::string_view header = lines[0];
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
  if (header.empty() || ec != std::errc() || ptr != header.data() + header.size() ||
      (header.size() > 1 && header[0] == '0')) {
    throw ParseError("malformed header line '" + std::string(header) + "': expected a decimal vertex count");
  }
  if (n == 0) throw ParseError("header declares zero vertices");
  if (n > kMaxVertices) throw ParseError("header declares " + std::to_string(n) + " vertices; limit is 64");
  if (lines.size() != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1),
                     static_cast<long>(std::min(lines.size() - 1, n)));
  }

  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view row = lines[i + 1];
    if (row.size() != n) {
      throw ParseError("row " + std::to_string(i) + " has length " + std::to_string(row.size()) + ", expected " +
                           std::to_string(n),
                       static_cast<long>(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') {
        throw ParseError("invalid character at row " + std::to_string(i) + ", column " + std::to_string(j),
                         static_cast<long>(i), static_cast<long>(j));
      }
      if (row[j] == '1') out[i] |= std::uint64_t{1} << j;
    }
    if ((out[i] >> i) & 1U) {
      throw ParseError("nonzero diagonal at row " + std::to_string(i) + ", column " + std::to_string(i),
                       static_cast<long>(i), static_cast<long>(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto both = ((out[i] >> j) & 1U) + ((out[j] >> i) & 1U);
      if (both != 1) {
        throw ParseError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                             (both == 0 ? "no arc" : "arcs in both directions") + " at row " + std::to_string(i) +
                             ", column " + std::to_string(j),
                         static_cast<long>(i), static_cast<long>(j));
      }
    }
  return Tournament::from_out_rows(std::move(out));
}

std::string serialize(const Tournament& t) {
  const std::size_t n = t.order();
  std::string s = std::to_string(n) + "\n";
  s.reserve(s.size() + n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s += t.dominates(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

Tournament transitive(std::size_t n) {
  if (n == 0) throw PreconditionError("transitive: n must be >= 1");
  check_order(n, "transitive");
  std::vector<std::uint64_t> out(n);
  const std::uint64_t all = VertexSet::all(n).mask();
  for (std::size_t i = 0; i < n; ++i) out[i] = all & ~VertexSet::all(i + 1).mask();
  return Tournament::from_out_rows(std::move(out));
}

Tournament paley(std::size_t p) {
  if (!is_prime(p)) {
    if (p >= 2 && prime_power_base(p) != 0) {
      throw UnsupportedError("paley: " + std::to_string(p) +
                             " is a proper prime power; only prime fields are supported");
    }
    throw PreconditionError("paley: " + std::to_string(p) + " is not prime");
  }
  if (p % 4 != 3) throw PreconditionError("paley: p must be congruent to 3 mod 4 (got " + std::to_string(p) + ")");
  check_order(p, "paley");
  std::vector<bool> square(p, false);
  for (std::size_t x = 1; x < p; ++x) square[(x * x) % p] = true;
  std::vector<std::uint64_t> out(p, 0);
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = 0; y < p; ++y)
      if (x != y && square[(x + p - y) % p]) out[x] |= std::uint64_t{1} << y;
  return Tournament::from_out_rows(std::move(out));
}

Tournament circulant(std::size_t n, VertexSet symbols) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("circulant: n must be odd");
  check_order(n, "circulant");
  if (symbols.contains(0) || symbols.bound() > n) {
    throw PreconditionError("circulant: symbols must lie in {1..n-1}");
  }
  for (std::size_t s = 1; s < n; ++s) {
    if (symbols.contains(s) == symbols.contains(n - s)) {
      throw PreconditionError("circulant: exactly one of " + std::to_string(s) + " and " + std::to_string(n - s) +
                              " must be a symbol");
    }
  }
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && symbols.contains((y + n - x) % n)) out[x] |= std::uint64_t{1} << y;
  return Tournament::from_out_rows(std::move(out));
}

Tournament counterexample7() {
  return Tournament::from_adjacency({
      {0, 0, 0, 0, 1, 1, 1},
      {1, 0, 0, 1, 0, 0, 1},
      {1, 1, 0, 0, 1, 0, 0},
      {1, 0, 1, 0, 0, 1, 0},
      {0, 1, 0, 1, 0, 0, 1},
      {0, 1, 1, 0, 1, 0, 0},
      {0, 0, 1, 1, 0, 1, 0},
  });
}

Tournament reversed_transitive(std::size_t n) {
  if (n < 2) throw PreconditionError("reversed_transitive: n must be >= 2");
  check_order(n, "reversed_transitive");
  const Tournament base = transitive(n);
  std::vector<std::uint64_t> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = base.out_mask(v);
  out[0] &= ~(std::uint64_t{1} << (n - 1));
  out[n - 1] |= 1U;
  return Tournament::from_out_rows(std::move(out));
}

Tournament switch_tournament(const Tournament& t, VertexSet x) {
  const std::size_t n = t.order();
  if (x.bound() > n) throw PreconditionError("switch: set " + x.to_string() + " has an index >= " + std::to_string(n));
  const std::uint64_t all = VertexSet::all(n).mask();
  const std::uint64_t in_x = x.mask();
  const std::uint64_t out_x = all & ~in_x;
  std::vector<std::uint64_t> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t across = x.contains(v) ? out_x : in_x;
    // Crossing arcs flip direction: out-neighbours across become in-neighbours and vice versa.
    out[v] = (t.out_mask(v) & ~across) | (t.in_mask(v) & across);
  }
  return Tournament::from_out_rows(std::move(out));
}

Tournament triple(const Tournament& t1, const Tournament& t2, const Tournament& t3) {
  const std::size_t n = t1.order();
  if (t2.order() != n || t3.order() != n) throw PreconditionError("triple: the three tournaments must have equal order");
  if (!is_regular(t1) || !is_regular(t2) || !is_regular(t3)) {
    throw PreconditionError("triple: all three tournaments must be regular");
  }
  check_order(3 * n, "triple");
  const std::uint64_t block = VertexSet::all(n).mask();
  std::vector<std::uint64_t> out(3 * n);
  const Tournament* parts[3] = {&t1, &t2, &t3};
  for (std::size_t b = 0; b < 3; ++b) {
    const std::size_t successor = (b + 1) % 3;
    for (std::size_t v = 0; v < n; ++v)
      out[b * n + v] = (parts[b]->out_mask(v) << (b * n)) | (block << (successor * n));
  }
  return Tournament::from_out_rows(std::move(out));
}

Tournament subtournament(const Tournament& t, VertexSet alpha) {
  if (alpha.empty()) throw PreconditionError("subtournament: empty vertex set");
  if (alpha.bound() > t.order()) throw PreconditionError("subtournament: index out of range in " + alpha.to_string());
  const auto idx = alpha.members();
  std::vector<std::uint64_t> out(idx.size(), 0);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (t.dominates(idx[a], idx[b])) out[a] |= std::uint64_t{1} << b;
  return Tournament::from_out_rows(std::move(out));
}

PairProfile pair_profile(const Tournament& t, std::size_t x, std::size_t y) {
  if (x == y) throw PreconditionError("pair_profile: x and y must differ");
  if (x >= t.order() || y >= t.order()) throw PreconditionError("pair_profile: vertex out of range");
  return {popcount(t.out_mask(x) & t.out_mask(y)), popcount(t.in_mask(x) & t.in_mask(y)),
          popcount(t.out_mask(x) & t.in_mask(y)), popcount(t.in_mask(x) & t.out_mask(y))};
}

std::size_t pair_three_cycles(const Tournament& t, std::size_t x, std::size_t y) {
  const PairProfile p = pair_profile(t, x, y);
  return t.dominates(x, y) ? p.in_out : p.out_in;
}

std::uint64_t three_cycle_count(const Tournament& t) {
  const std::uint64_t n = t.order();
  std::uint64_t transitive_triples = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t d = t.out_degree(v);
    transitive_triples += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  const std::uint64_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  return triples - transitive_triples;
}

std::uint64_t arc_code(const Tournament& t) {
  const std::size_t n = t.order();
  if (arc_code_bits(n) > 64) throw UnsupportedError("arc_code: at most 11 vertices");
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (t.dominates(i, j)) code |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
  return code;
}

Tournament from_arc_code(std::size_t n, std::uint64_t code) {
  if (n == 0) throw PreconditionError("from_arc_code: n must be >= 1");
  if (arc_code_bits(n) > 64) throw UnsupportedError("from_arc_code: at most 11 vertices");
  if (arc_code_bits(n) < 64 && (code >> arc_code_bits(n)) != 0) {
    throw PreconditionError("from_arc_code: code has bits beyond C(n,2)");
  }
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> (j * (j - 1) / 2 + i)) & 1U) out[i] |= std::uint64_t{1} << j;
      else out[j] |= std::uint64_t{1} << i;
    }
  return Tournament::from_out_rows(std::move(out));
}

bool is_transitive(const Tournament& t) { return three_cycle_count(t) == 0; }

bool is_regular(const Tournament& t) {
  const std::size_t n = t.order();
  if (n < 3 || n % 2 == 0) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (t.out_degree(v) != (n - 1) / 2) return false;
  return true;
}

bool is_doubly_regular(const Tournament& t) {
  if (!is_regular(t)) return false;
  const std::size_t n = t.order();
  const std::size_t common = popcount(t.out_mask(0) & t.out_mask(1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (popcount(t.out_mask(x) & t.out_mask(y)) != common) return false;
  return true;
}

StructureReport structure_report(const Tournament& t) {
  const std::size_t n = t.order();
  StructureReport r;
  r.out_degrees.resize(n);
  for (std::size_t v = 0; v < n; ++v) r.out_degrees[v] = t.out_degree(v);
  r.three_cycle_count = three_cycle_count(t);
  r.is_transitive = r.three_cycle_count == 0;
  r.is_regular = is_regular(t);
  if (n % 2 == 0) {
    r.is_near_regular = true;
    for (std::size_t d : r.out_degrees)
      if (d != (n - 2) / 2 && d != n / 2) r.is_near_regular = false;
  }
  r.is_doubly_regular = is_doubly_regular(t);
  if (r.is_doubly_regular) r.t = popcount(t.out_mask(0) & t.out_mask(1));

  if (n >= 2) {
    const std::size_t first = pair_three_cycles(t, 0, 1);
    bool constant = true;
    for (std::size_t x = 0; x < n && constant; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (pair_three_cycles(t, x, y) != first) {
          constant = false;
          break;
        }
    r.is_homogeneous = constant && first > 0;
  }
  return r;
}

}  // namespace tmono
