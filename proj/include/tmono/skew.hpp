#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "tmono/matrix.hpp"
#include "tmono/tournament.hpp"

namespace tmono {

// Largest order accepted by the brute-force switching searches.
inline constexpr std::size_t kMaxSwitchOrder = 24;

// S = A - A^T
IntMatrix skew_matrix(const Tournament& t);

// S^T S = (n-1) I
bool is_skew_conference(const Tournament& t);

enum class SwitchTarget { transitive, doubly_regular };

// Numerically least X (vertex n-1 never in X, since X and its complement give
// the same switch) such that switching t at X gives
// the target structure. Throws UnsupportedError above kMaxSwitchOrder.
std::optional<VertexSet> find_switch(const Tournament& t, SwitchTarget target);

// Some X with switch(a, X) == b as labeled tournaments.
bool are_switching_equivalent(const Tournament& a, const Tournament& b);

enum class SkewTag { switch_of_transitive, skew_conference, switch_of_doubly_regular, other };

std::string_view to_string(SkewTag tag);

struct SkewClass {
  SkewTag tag = SkewTag::other;
  std::optional<VertexSet> certificate;  // switching set for the switch classes
};

// Precedence: switch of transitive, skew-conference, switch of doubly regular.
SkewClass classify_skew(const Tournament& t);

}  // namespace tmono
