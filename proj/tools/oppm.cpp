// oppm: generate corpora, run filtered order-preserving searches, benchmark
// the filtration schemes and run the built-in self test.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "oppm/oppm.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;

struct Options {
  // text source
  std::string text_file;
  std::optional<std::int64_t> rand_delta;
  std::optional<std::int64_t> period_delta;
  std::size_t n = std::size_t{1} << 20;
  std::uint64_t seed = 1;
  std::string type = "i32";

  // patterns
  std::string pattern_file;
  std::vector<std::size_t> pattern_lens;
  std::size_t pattern_count = 100;

  // schemes
  std::string scheme;
  std::optional<int> q;

  std::string format = "csv";
  std::size_t fp_window = std::size_t{1} << 20;
  std::size_t reps = 5;
  bool verify = false;
  bool positions = false;

  // gen output
  std::string out;
  bool binary = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

oppm::ElementType element_type(const Options& o) {
  auto t = oppm::parse_element_type(o.type);
  if (!t) throw UsageError("--type must be one of i32, i64, f64");
  return *t;
}

oppm::FilterScheme make_scheme(const std::string& name, std::optional<int> q) {
  try {
    if (name == "fct") return oppm::FilterScheme::binary();
    if (name == "nr") return oppm::FilterScheme::nr(q.value_or(4));
    if (name == "no") return oppm::FilterScheme::no(q.value_or(3));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("--scheme must be one of fct, nr, no");
}

/// Loads or generates the text in its own element domain.
oppm::AnySequence load_text(const Options& o) {
  const int sources = !o.text_file.empty() + o.rand_delta.has_value() + o.period_delta.has_value();
  if (sources != 1) throw UsageError("give exactly one of --text, --rand-delta, --period-delta");
  const auto type = element_type(o);
  if (!o.text_file.empty()) return oppm::read_sequence_file(o.text_file, type);

  oppm::GenSpec spec;
  spec.kind = o.rand_delta ? oppm::CorpusKind::rand_delta : oppm::CorpusKind::period_delta;
  spec.delta = o.rand_delta ? *o.rand_delta : *o.period_delta;
  spec.n = o.n;
  spec.seed = o.seed;
  if (spec.delta < 0) throw UsageError("delta must be non-negative");
  try {
    switch (type) {
      case oppm::ElementType::i32: return oppm::generate<std::int32_t>(spec);
      case oppm::ElementType::i64: return oppm::generate<std::int64_t>(spec);
      case oppm::ElementType::f64: return oppm::generate<double>(spec);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unreachable");
}

int run_gen(const Options& o) {
  const oppm::AnySequence text = load_text(o);
  std::visit(
      [&](const auto& seq) {
        if (o.out.empty()) {
          if (o.binary) std::cout << oppm::encode_binary(seq);
          else std::cout << oppm::encode_text(seq);
        } else {
          oppm::write_sequence_file(o.out, seq, o.binary);
        }
      },
      text);
  return exit_ok;
}

template <oppm::Element T>
int search_in(const oppm::Sequence<T>& text, const Options& o) {
  const oppm::FilterScheme scheme = make_scheme(o.scheme.empty() ? "no" : o.scheme, o.q);

  std::vector<oppm::Sequence<T>> patterns;
  if (!o.pattern_file.empty()) {
    patterns.push_back(oppm::convert<T>(oppm::read_sequence_file(o.pattern_file, element_type(o))));
  } else {
    if (o.pattern_lens.size() != 1) throw UsageError("give --pattern FILE or one --pattern-len");
    patterns = oppm::extract_patterns(text, o.pattern_lens.front(), o.pattern_count,
                                      oppm::pattern_seed(o.seed, o.pattern_lens.front()));
  }

  std::cout << "pattern,m,occurrences,candidates,false_positives,fp_per_2e20,filter_ms,verify_ms";
  if (o.positions) std::cout << ",positions";
  std::cout << "\n";
  int status = exit_ok;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& p = patterns[i];
    if (p.size() < 2 || p.size() <= scheme.shrink())
      throw UsageError("pattern " + std::to_string(i) + " is too short for " + scheme.name());
    const auto searcher = oppm::Searcher<T>::preprocess(p, scheme);
    const auto rep = searcher.search(text);
    if (o.verify && rep.occurrences != oppm::brute_force_search(p, text)) {
      std::cerr << "verification failed for pattern " << i << "\n";
      status = exit_verify;
    }
    std::cout << i << "," << p.size() << "," << rep.occurrences.size() << "," << rep.candidates
              << "," << rep.false_positives << ","
              << oppm::format_fixed(rep.text_len ? oppm::fp_per_window(rep, o.fp_window) : 0.0, 2)
              << "," << oppm::format_fixed(std::chrono::duration<double, std::milli>(rep.filter_time).count(), 4)
              << "," << oppm::format_fixed(std::chrono::duration<double, std::milli>(rep.verify_time).count(), 4);
    if (o.positions) {
      std::cout << ",";
      for (std::size_t k = 0; k < rep.occurrences.size(); ++k)
        std::cout << (k ? " " : "") << rep.occurrences[k];
    }
    std::cout << "\n";
  }
  return status;
}

template <oppm::Element T>
int bench_in(const oppm::Sequence<T>& text, const Options& o) {
  oppm::BenchConfig cfg;
  if (!o.pattern_lens.empty()) cfg.lengths = o.pattern_lens;
  cfg.patterns_per_length = o.pattern_count;
  cfg.seed = o.seed;
  cfg.fp_window = o.fp_window;
  cfg.reps = o.reps;
  cfg.verify = o.verify;
  if (!o.scheme.empty()) {
    // A single scheme is benchmarked against the FCT baseline.
    const auto s = make_scheme(o.scheme, o.q);
    cfg.schemes = {oppm::FilterScheme::binary()};
    if (s.kind() != oppm::FilterKind::binary) cfg.schemes.push_back(s);
  }
  if (o.format != "csv" && o.format != "table") throw UsageError("--format must be csv or table");

  const auto result = oppm::run_bench(text, cfg);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& f : result.failures) std::cerr << "verification failed: " << f << "\n";
  std::cout << oppm::emit(result.rows, o.format == "csv" ? oppm::OutputFormat::csv
                                                          : oppm::OutputFormat::table);
  return result.ok() ? exit_ok : exit_verify;
}

void add_text_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--text", o.text_file, "Text sequence file (text or OPSQ binary)");
  cmd->add_option("--rand-delta", o.rand_delta, "Generate a Rand-delta text");
  cmd->add_option("--period-delta", o.period_delta, "Generate a Period-delta text");
  cmd->add_option("--n", o.n, "Generated text length")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Generator seed");
  cmd->add_option("--type", o.type, "Element domain for generated and text-mode files: i32, i64, f64");
}

void add_search_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--pattern-len", o.pattern_lens, "Pattern length(s), comma separated")->delimiter(',');
  cmd->add_option("--pattern-count", o.pattern_count, "Patterns extracted per length")->check(CLI::PositiveNumber);
  cmd->add_option("--scheme", o.scheme, "Filter scheme: fct, nr, no");
  cmd->add_option("--q", o.q, "Neighborhood size for nr/no");
  cmd->add_option("--fp-window", o.fp_window, "False positives are reported per this many text elements")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--verify", o.verify, "Cross-check every search against the brute-force oracle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-preserving pattern matching with neighborhood filters"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a benchmark text");
  add_text_options(gen, o);
  gen->add_option("--out", o.out, "Output file (default stdout)");
  gen->add_flag("--binary", o.binary, "Write the OPSQ binary format");

  auto* search = app.add_subcommand("search", "Search patterns in a text");
  add_text_options(search, o);
  add_search_options(search, o);
  search->add_option("--pattern", o.pattern_file, "Pattern sequence file");
  search->add_flag("--positions", o.positions, "Append occurrence positions to each row");

  auto* bench = app.add_subcommand("bench", "Benchmark filtration schemes");
  add_text_options(bench, o);
  add_search_options(bench, o);
  bench->add_option("--format", o.format, "Output format: csv or table");
  bench->add_option("--reps", o.reps, "Timed repetitions per pattern (median reported)")
      ->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run golden examples and property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (gen->parsed()) return run_gen(o);
    if (selftest->parsed()) {
      const auto rep = oppm::run_selftest();
      oppm::print_selftest(rep, std::cout);
      return rep.ok() ? exit_ok : exit_verify;
    }
    const oppm::AnySequence text = load_text(o);
    if (search->parsed())
      return std::visit([&](const auto& t) { return search_in(t, o); }, text);
    return std::visit([&](const auto& t) { return bench_in(t, o); }, text);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
