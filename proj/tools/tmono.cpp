// tmono command-line front end.
//
// Exit codes: 0 affirmative, 1 negative verdict on well-formed input,
// 2 usage or input error, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tmono/census.hpp"
#include "tmono/errors.hpp"
#include "tmono/report.hpp"
#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"
#include "tmono/tournament.hpp"
#include "tmono/verify.hpp"

namespace {

using namespace tmono;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tournament read_tournament(const std::string& path) {
  try {
    return parse_tournament(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what(), e.row(), e.col());
  }
}

// "0,3,5" or "" -> vertex set
VertexSet parse_set(const std::string& text) {
  std::vector<std::size_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long x = 0;
    try {
      x = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw PreconditionError("bad vertex '" + item + "' in set '" + text + "'");
    v.push_back(x);
  }
  return VertexSet::of(v);
}

bool want_json(const std::string& format) { return format == "json"; }

struct GenArgs {
  std::string kind;
  std::vector<std::size_t> params;
  std::string switch_set;
  std::vector<std::string> triple_files;
};

int run_gen(const GenArgs& a) {
  const auto need = [&](std::size_t count) {
    if (a.params.size() != count) {
      throw PreconditionError("gen " + a.kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  std::optional<Tournament> t;
  if (!a.triple_files.empty()) {
    if (!a.kind.empty()) throw PreconditionError("gen: give either a generator or --triple, not both");
    if (std::count(a.triple_files.begin(), a.triple_files.end(), "-") > 1) {
      throw PreconditionError("gen --triple: standard input can be used at most once");
    }
    t = triple(read_tournament(a.triple_files[0]), read_tournament(a.triple_files[1]),
               read_tournament(a.triple_files[2]));
  } else if (a.kind == "transitive") {
    need(1);
    t = transitive(a.params[0]);
  } else if (a.kind == "paley") {
    need(1);
    t = paley(a.params[0]);
  } else if (a.kind == "circulant") {
    if (a.params.empty()) throw PreconditionError("gen circulant takes n followed by the connection set");
    t = circulant(a.params[0], VertexSet::of(std::span(a.params).subspan(1)));
  } else if (a.kind == "counterexample7") {
    need(0);
    t = counterexample7();
  } else if (a.kind == "rn") {
    need(1);
    t = reversed_transitive(a.params[0]);
  } else if (a.kind.empty()) {
    throw PreconditionError("gen: missing generator");
  } else {
    throw PreconditionError("gen: unknown generator '" + a.kind + "'");
  }
  if (!a.switch_set.empty()) t = switch_tournament(*t, parse_set(a.switch_set));
  std::cout << serialize(*t);
  return kYes;
}

int run_info(const std::string& file, const std::string& format) {
  const StructureReport r = structure_report(read_tournament(file));
  std::cout << (want_json(format) ? structure_to_json(r) + "\n" : format_structure(r));
  return kYes;
}

int run_check(const std::string& file, std::size_t k, bool skew, unsigned jobs, const std::string& format) {
  const Tournament t = read_tournament(file);
  const MonomorphyVerdict v = spectral_monomorphy(t, k, skew ? Mode::skew : Mode::adjacency, jobs);
  std::cout << (want_json(format) ? verdict_to_json(v) + "\n" : format_verdict(v));
  return v.monomorphic() ? kYes : kNo;
}

int run_classify(const std::string& file, bool skew, const std::string& format) {
  const Tournament t = read_tournament(file);
  if (skew) {
    const SkewClass c = classify_skew(t);
    if (want_json(format)) {
      std::cout << skew_class_to_json(c) << "\n";
    } else {
      std::cout << to_string(c.tag);
      if (c.certificate) std::cout << " " << c.certificate->to_string();
      std::cout << "\n";
    }
    return c.tag == SkewTag::other ? kNo : kYes;
  }
  const N2Class c = classify_n2(t);
  std::cout << (want_json(format) ? n2_class_to_json(c) : std::string(to_string(c))) << "\n";
  return c == N2Class::not_monomorphic ? kNo : kYes;
}

int run_verify_cmd(const std::string& suite, const VerifyOptions& opts, const std::string& format) {
  if (suite == "theorem2" && opts.n == 63 && opts.allow_large) {
    std::cerr << "warning: theorem2 at n=63 may compute up to 63 characteristic polynomials of order 62\n";
  }
  const VerifyResult r = run_verify(suite, opts);
  std::cout << (want_json(format) ? verify_to_json(r) + "\n" : format_verify(r));
  return r.passed() ? kYes : kNo;
}

struct CensusArgs {
  std::optional<std::size_t> n, k;
  bool skew = false;
  std::string question;
  unsigned jobs = 1;
  std::string resume;
  std::string checkpoint;
  std::string output;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
};

int run_census_cmd(const CensusArgs& a, const std::string& format) {
  CensusOptions opts;
  opts.jobs = a.jobs;
  opts.checkpoint_path = a.checkpoint;
  CensusReport r;
  if (!a.resume.empty()) {
    CensusReport partial = census_from_json(read_text(a.resume));
    if ((a.n && *a.n != partial.params.n) || (a.k && *a.k != partial.params.k) ||
        (!a.question.empty() && parse_question(a.question) != partial.params.question)) {
      throw PreconditionError("census --resume: parameters differ from the checkpoint");
    }
    if (opts.checkpoint_path.empty()) opts.checkpoint_path = a.resume;
    r = resume_census(std::move(partial), opts);
  } else {
    if (!a.n || !a.k || a.question.empty()) throw PreconditionError("census needs --n, --k and --question");
    CensusParams p;
    p.n = *a.n;
    p.k = *a.k;
    p.mode = a.skew ? Mode::skew : Mode::adjacency;
    p.question = parse_question(a.question);
    if (a.samples) {
      p.sampled = true;
      p.samples = *a.samples;
      p.seed = a.seed;
    }
    r = run_census(p, opts);
  }
  const std::string doc = census_to_json(r);
  if (!a.output.empty()) {
    std::ofstream out(a.output, std::ios::binary);
    if (!out) throw Error("cannot write '" + a.output + "'");
    out << doc;
  }
  std::cout << (want_json(format) ? doc + "\n" : census_summary(r));
  return r.exceptions.empty() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral monomorphy of tournaments"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a tournament in text format");
  gen_cmd->add_option("generator", gen.kind, "transitive N | paley P | circulant N S... | counterexample7 | rn N");
  gen_cmd->add_option("params", gen.params, "Generator parameters");
  gen_cmd->add_option("--switch", gen.switch_set, "Reverse arcs across this vertex set, e.g. 0,2,5");
  gen_cmd->add_option("--triple", gen.triple_files, "Three tournament files for the triple construction")
      ->expected(3);

  std::string file;
  auto* info_cmd = app.add_subcommand("info", "Structure report");
  info_cmd->add_option("file", file, "Tournament file, - for stdin")->required();

  std::size_t k = 0;
  bool skew = false;
  unsigned jobs = 1;
  auto* check_cmd = app.add_subcommand("check", "Decide k-spectral monomorphy");
  check_cmd->add_option("file", file, "Tournament file, - for stdin")->required();
  check_cmd->add_option("--k", k, "Subset size")->required();
  check_cmd->add_flag("--skew", skew, "Use the skew-adjacency matrix");
  check_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Classify (n-2)-spectral monomorphy, or the skew class");
  classify_cmd->add_option("file", file, "Tournament file, - for stdin")->required();
  classify_cmd->add_flag("--skew", skew, "Classify up to switching");

  std::string suite;
  VerifyOptions vopts;
  std::size_t vn = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity or theorem suite");
  std::vector<std::string> suites(verify_suite_names().begin(), verify_suite_names().end());
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  auto* vn_opt = verify_cmd->add_option("--n", vn, "Restrict to one order");
  verify_cmd->add_option("--trials", vopts.trials, "Random instances per order");
  verify_cmd->add_option("--seed", vopts.seed, "Random seed");
  verify_cmd->add_option("--jobs", vopts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--allow-large", vopts.allow_large, "Permit theorem2 at n=63");

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Exhaustive or sampled census");
  census_cmd->add_option("--n", census.n, "Tournament order");
  census_cmd->add_option("--k", census.k, "Subset size");
  census_cmd->add_flag("--skew", census.skew, "Use the skew-adjacency matrix");
  census_cmd->add_option("--question", census.question, "theorem1 | prop3 | prop8 | problem1");
  census_cmd->add_option("--jobs", census.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--resume", census.resume, "Continue from a checkpoint document");
  census_cmd->add_option("--checkpoint", census.checkpoint, "Write progress to this file");
  census_cmd->add_option("--output", census.output, "Write the final document to this file");
  census_cmd->add_option("--samples", census.samples, "Sample this many random tournaments instead");
  census_cmd->add_option("--seed", census.seed, "Seed for --samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*info_cmd) return run_info(file, format);
    if (*check_cmd) return run_check(file, k, skew, jobs, format);
    if (*classify_cmd) return run_classify(file, skew, format);
    if (*verify_cmd) {
      if (*vn_opt) vopts.n = vn;
      return run_verify_cmd(suite, vopts, format);
    }
    if (*census_cmd) return run_census_cmd(census, format);
  } catch (const TheoremViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
