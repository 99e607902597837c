#include "tmono/census.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tmono/errors.hpp"
#include "tmono/skew.hpp"

namespace tmono {

namespace {

constexpr std::size_t kMaxExhaustive = 7;
constexpr std::size_t kMaxSampled = 8;

bool skew_explained(SkewTag tag, CensusQuestion q) {
  switch (tag) {
    case SkewTag::switch_of_transitive:
    case SkewTag::skew_conference: return true;
    case SkewTag::switch_of_doubly_regular: return q == CensusQuestion::problem1;
    case SkewTag::other: return false;
  }
  return false;
}

std::string snake(SkewTag tag) {
  switch (tag) {
    case SkewTag::switch_of_transitive: return "switch_of_transitive";
    case SkewTag::skew_conference: return "skew_conference";
    case SkewTag::switch_of_doubly_regular: return "switch_of_doubly_regular";
    case SkewTag::other: return "other";
  }
  return "?";
}

CensusVerdict classify_given(const Tournament& t, bool mono, const CensusParams& p) {
  CensusVerdict v;
  v.monomorphic = mono;
  const std::size_t n = t.order();
  auto exception = [&](std::string reason) {
    v.tag = "exception";
    v.exception_reason = std::move(reason);
  };

  switch (p.question) {
    case CensusQuestion::theorem1: {
      const bool tr = is_transitive(t);
      const bool dr = !tr && is_doubly_regular(t);
      if (mono) {
        if (tr) {
          v.tag = "transitive";
        } else if (dr) {
          v.tag = "doubly_regular";
          if (n >= 7 && char_poly(t) != doubly_regular_polys(n).full) {
            exception("doubly regular but characteristic polynomial differs from the closed form");
          }
        } else {
          exception("monomorphic but neither transitive nor doubly regular");
        }
      } else if (tr || dr) {
        exception(std::string(tr ? "transitive" : "doubly regular") + " but not monomorphic");
      } else {
        v.tag = "not_monomorphic";
      }
      break;
    }
    case CensusQuestion::prop3: {
      const bool tr = is_transitive(t);
      if (mono) {
        if (tr) v.tag = "transitive";
        else exception("monomorphic but not transitive");
      } else if (tr) {
        exception("transitive but not monomorphic");
      } else {
        v.tag = "not_monomorphic";
      }
      break;
    }
    case CensusQuestion::prop8:
    case CensusQuestion::problem1: {
      const SkewClass c = classify_skew(t);
      const bool explained = skew_explained(c.tag, p.question);
      if (mono) {
        if (explained) v.tag = snake(c.tag);
        else exception("skew-monomorphic but not in a known class (" + std::string(to_string(c.tag)) + ")");
      } else if (explained) {
        exception(std::string(to_string(c.tag)) + " but not skew-monomorphic");
      } else {
        v.tag = "not_monomorphic";
      }
      break;
    }
  }
  return v;
}

struct Partial {
  std::uint64_t total = 0;
  std::uint64_t monomorphic = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<CensusException> exceptions;
};

std::uint64_t index_limit(const CensusParams& p) {
  return p.sampled ? p.samples : (std::uint64_t{1} << arc_code_bits(p.n));
}

std::vector<std::uint64_t> sample_codes(const CensusParams& p) {
  std::vector<std::uint64_t> codes;
  if (!p.sampled) return codes;
  std::mt19937_64 rng(p.seed);
  const std::uint64_t mask = (std::uint64_t{1} << arc_code_bits(p.n)) - 1;
  codes.reserve(p.samples);
  for (std::uint64_t i = 0; i < p.samples; ++i) codes.push_back(rng() & mask);
  return codes;
}

Partial run_chunk(const CensusParams& p, const SubtournamentPolyTable& table,
                  const std::vector<std::uint64_t>& samples, std::uint64_t lo, std::uint64_t hi) {
  Partial out;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    const std::uint64_t code = p.sampled ? samples[idx] : idx;
    const bool mono = table.monomorphic(code);
    const Tournament t = from_arc_code(p.n, code);
    CensusVerdict v = classify_given(t, mono, p);
    ++out.total;
    if (mono) ++out.monomorphic;
    ++out.counts[v.tag];
    if (v.exception_reason) out.exceptions.push_back({code, *v.exception_reason, serialize(t)});
  }
  return out;
}

void merge(CensusReport& r, Partial&& part) {
  r.total += part.total;
  r.monomorphic += part.monomorphic;
  for (auto& [tag, c] : part.counts) r.class_counts[tag] += c;
  for (auto& e : part.exceptions) r.exceptions.push_back(std::move(e));
}

void write_checkpoint(const std::string& path, const CensusReport& r) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint " + tmp);
    out << census_to_json(r);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot move checkpoint into place: " + path);
}

}  // namespace

void enumerate_labeled(std::size_t n, const std::function<bool(const Tournament&)>& visit) {
  if (n < 3 || n > kMaxExhaustive) {
    throw PreconditionError("enumerate_labeled: exhaustive enumeration needs 3 <= n <= 7");
  }
  const std::uint64_t limit = std::uint64_t{1} << arc_code_bits(n);
  for (std::uint64_t code = 0; code < limit; ++code)
    if (!visit(from_arc_code(n, code))) return;
}

std::string_view to_string(CensusQuestion q) {
  switch (q) {
    case CensusQuestion::theorem1: return "theorem1";
    case CensusQuestion::prop3: return "prop3";
    case CensusQuestion::prop8: return "prop8";
    case CensusQuestion::problem1: return "problem1";
  }
  return "?";
}

CensusQuestion parse_question(std::string_view name) {
  for (auto q : {CensusQuestion::theorem1, CensusQuestion::prop3, CensusQuestion::prop8, CensusQuestion::problem1})
    if (to_string(q) == name) return q;
  throw PreconditionError("unknown census question '" + std::string(name) + "'");
}

void validate(const CensusParams& p) {
  const std::size_t n = p.n;
  if (p.sampled) {
    if (n < 3 || n > kMaxSampled) throw PreconditionError("sampled census needs 3 <= n <= 8");
    if (p.samples == 0) throw PreconditionError("sampled census needs a positive sample count");
  } else if (n < 3 || n > kMaxExhaustive) {
    throw PreconditionError("exhaustive census needs 3 <= n <= 7 (use sampled mode for n = 8)");
  }
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw PreconditionError(msg);
  };
  switch (p.question) {
    case CensusQuestion::theorem1:
      need(p.mode == Mode::adjacency, "theorem1 is an adjacency question");
      need(n >= 5, "theorem1 needs n >= 5");
      need(p.k == n - 2, "theorem1 needs k = n-2");
      break;
    case CensusQuestion::prop3:
      need(p.mode == Mode::adjacency, "prop3 is an adjacency question");
      need(n >= 6, "prop3 needs n >= 6");
      need(p.k >= 3 && p.k + 3 <= n, "prop3 needs 3 <= k <= n-3");
      break;
    case CensusQuestion::prop8:
      need(p.mode == Mode::skew, "prop8 is a skew question (pass --skew)");
      need(n >= 7, "prop8 needs n >= 7");
      need(p.k == n - 3, "prop8 needs k = n-3");
      break;
    case CensusQuestion::problem1:
      need(p.mode == Mode::skew, "problem1 is a skew question (pass --skew)");
      need(n >= 6, "problem1 needs n >= 6");
      need(p.k == n - 2, "problem1 needs k = n-2");
      break;
  }
}

CensusVerdict census_classify(const Tournament& t, const CensusParams& params) {
  if (t.order() != params.n) throw PreconditionError("census_classify: tournament order differs from n");
  const bool mono = spectral_monomorphy(t, params.k, params.mode).monomorphic();
  return classify_given(t, mono, params);
}

CensusReport run_census(const CensusParams& params, const CensusOptions& options) {
  validate(params);
  CensusReport r;
  r.params = params;
  return resume_census(std::move(r), options);
}

CensusReport resume_census(CensusReport r, const CensusOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const CensusParams& p = r.params;
  validate(p);
  const std::uint64_t limit = index_limit(p);
  if (r.next_index > limit) throw PreconditionError("checkpoint is past the end of the enumeration");

  const SubtournamentPolyTable table(p.n, p.k, p.mode);
  const std::vector<std::uint64_t> samples = sample_codes(p);
  const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1);
  const unsigned jobs = std::max(options.jobs, 1U);

  while (r.next_index < limit) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t lo = r.next_index; lo < limit && ranges.size() < jobs; lo += chunk)
      ranges.emplace_back(lo, std::min(limit, lo + chunk));

    std::vector<Partial> parts(ranges.size());
    if (ranges.size() == 1) {
      parts[0] = run_chunk(p, table, samples, ranges[0].first, ranges[0].second);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back([&, i] { parts[i] = run_chunk(p, table, samples, ranges[i].first, ranges[i].second); });
      for (auto& th : pool) th.join();
    }
    for (auto& part : parts) merge(r, std::move(part));
    r.next_index = ranges.back().second;

    if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, r);
    if (options.stop_after && r.next_index >= *options.stop_after && r.next_index < limit) break;
  }
  r.complete = r.next_index == limit;
  if (r.complete && !options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, r);
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

std::string census_to_json(const CensusReport& r) {
  nlohmann::json j;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["mode"] = std::string(to_string(r.params.mode));
  j["question"] = std::string(to_string(r.params.question));
  j["sampled"] = r.params.sampled;
  j["samples"] = r.params.samples;
  j["seed"] = r.params.seed;
  j["total"] = r.total;
  j["monomorphic"] = r.monomorphic;
  j["class_counts"] = r.class_counts;
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& e : r.exceptions)
    ex.push_back({{"code", e.code}, {"reason", e.reason}, {"tournament", e.tournament}});
  j["exceptions"] = std::move(ex);
  j["next_index"] = r.next_index;
  j["complete"] = r.complete;
  return j.dump(2) + "\n";
}

CensusReport census_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("census report is not valid JSON: ") + e.what());
  }
  try {
    CensusReport r;
    r.params.n = j.at("n").get<std::size_t>();
    r.params.k = j.at("k").get<std::size_t>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "adjacency" && mode != "skew") throw ParseError("unknown mode '" + mode + "'");
    r.params.mode = mode == "skew" ? Mode::skew : Mode::adjacency;
    r.params.question = parse_question(j.at("question").get<std::string>());
    r.params.sampled = j.at("sampled").get<bool>();
    r.params.samples = j.at("samples").get<std::uint64_t>();
    r.params.seed = j.at("seed").get<std::uint64_t>();
    r.total = j.at("total").get<std::uint64_t>();
    r.monomorphic = j.at("monomorphic").get<std::uint64_t>();
    r.class_counts = j.at("class_counts").get<std::map<std::string, std::uint64_t>>();
    for (const auto& e : j.at("exceptions"))
      r.exceptions.push_back(
          {e.at("code").get<std::uint64_t>(), e.at("reason").get<std::string>(), e.at("tournament").get<std::string>()});
    r.next_index = j.at("next_index").get<std::uint64_t>();
    r.complete = j.at("complete").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("census report is missing a field: ") + e.what());
  }
}

std::string census_summary(const CensusReport& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << "census " << to_string(p.question) << ": n=" << p.n << " k=" << p.k << " mode=" << to_string(p.mode);
  if (p.sampled) os << " sampled=" << p.samples << " seed=" << p.seed;
  os << "\n";
  os << std::left << std::setw(28) << "class" << std::right << std::setw(12) << "count" << "\n";
  for (const auto& [tag, c] : r.class_counts) os << std::left << std::setw(28) << tag << std::right << std::setw(12) << c << "\n";
  os << std::left << std::setw(28) << "total" << std::right << std::setw(12) << r.total << "\n";
  os << std::left << std::setw(28) << "monomorphic" << std::right << std::setw(12) << r.monomorphic << "\n";
  os << "exceptions: " << r.exceptions.size() << (r.complete ? "" : " (incomplete run)") << "\n";
  for (const auto& e : r.exceptions) os << "  code " << e.code << ": " << e.reason << "\n";
  os << std::fixed << std::setprecision(2) << "elapsed: " << r.elapsed_seconds << " s\n";
  return os.str();
}

}  // namespace tmono
