#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmono/spectra.hpp"
#include "tmono/tournament.hpp"

namespace tmono {

// Exhaustive enumeration: every labeled n-tournament (3 <= n <= 7), in
// increasing arc-code order. The callback returns false to stop.
void enumerate_labeled(std::size_t n, const std::function<bool(const Tournament&)>& visit);

enum class CensusQuestion { theorem1, prop3, prop8, problem1 };

std::string_view to_string(CensusQuestion q);
CensusQuestion parse_question(std::string_view name);

struct CensusParams {
  std::size_t n = 0;
  std::size_t k = 0;
  Mode mode = Mode::adjacency;
  CensusQuestion question = CensusQuestion::theorem1;
  // Sampled mode draws `samples` arc codes from a seeded mt19937_64; it is the
  // only mode allowed for n = 8.
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct CensusException {
  std::uint64_t code = 0;
  std::string reason;
  std::string tournament;  // tournament text format
};

struct CensusReport {
  CensusParams params;
  std::uint64_t total = 0;        // tournaments examined
  std::uint64_t monomorphic = 0;  // of which k-(skew-)spectrally monomorphic
  std::map<std::string, std::uint64_t> class_counts;
  std::vector<CensusException> exceptions;
  std::uint64_t next_index = 0;  // first arc code (or sample index) not yet examined
  bool complete = false;
  double elapsed_seconds = 0.0;  // wall time of this invocation; not part of the JSON document
};

struct CensusOptions {
  unsigned jobs = 1;
  // Written after every round of chunks when non-empty.
  std::string checkpoint_path;
  std::uint64_t chunk_size = 1U << 14;
  // Stop (incomplete) once at least this many indices are done. Simulates an
  // interruption for resumability tests.
  std::optional<std::uint64_t> stop_after;
};

// Throws PreconditionError when n, k, mode and question are inconsistent.
void validate(const CensusParams& params);

CensusReport run_census(const CensusParams& params, const CensusOptions& options = {});

// Continue an incomplete report (typically loaded from a checkpoint).
CensusReport resume_census(CensusReport partial, const CensusOptions& options = {});

// Classification tag for a single tournament under `params`, plus whether it
// is an exception (with a reason). Shared by the census loop and by
// re-verification of listed exceptions.
struct CensusVerdict {
  bool monomorphic = false;
  std::string tag;
  std::optional<std::string> exception_reason;
};

CensusVerdict census_classify(const Tournament& t, const CensusParams& params);

// Deterministic document: identical for identical parameters regardless of
// jobs, chunking or interruptions. Wall time is deliberately excluded.
std::string census_to_json(const CensusReport& report);
CensusReport census_from_json(std::string_view text);

// Human-readable table.
std::string census_summary(const CensusReport& report);

}  // namespace tmono
