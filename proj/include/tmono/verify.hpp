#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tmono {

struct VerifyOptions {
  std::optional<std::size_t> n;  // restrict to one order where the suite is parameterised by n
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool allow_large = false;  // permits theorem2 at n = 63
  unsigned jobs = 1;
};

struct VerifyResult {
  std::string suite;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty() && checks > 0; }
};

// eq1 schwenk corollary1 prop2 aat lemma1 lemma2 gregory prop11 theorem1
// theorem2 rn main3
const std::vector<std::string_view>& verify_suite_names();

// Throws PreconditionError for an unknown suite or out-of-range options.
VerifyResult run_verify(std::string_view suite, const VerifyOptions& options = {});

}  // namespace tmono
