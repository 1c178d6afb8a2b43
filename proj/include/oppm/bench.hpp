#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oppm/core.hpp"
#include "oppm/filters.hpp"
#include "oppm/gen.hpp"
#include "oppm/search.hpp"

namespace oppm {

/// The scheme line-up of the published tables: FCT, NR2..NR6, NO2..NO4.
inline std::vector<FilterScheme> default_schemes() {
  std::vector<FilterScheme> s{FilterScheme::binary()};
  for (int q = 2; q <= 6; ++q) s.push_back(FilterScheme::nr(q));
  for (int q = 2; q <= 4; ++q) s.push_back(FilterScheme::no(q));
  return s;
}

struct BenchConfig {
  std::vector<std::size_t> lengths{8, 12, 16, 20, 24, 28, 32};
  std::size_t patterns_per_length = 100;
  std::vector<FilterScheme> schemes = default_schemes();
  std::uint64_t seed = 1;
  std::size_t fp_window = std::size_t{1} << 20;
  std::size_t reps = 5;
  bool verify = false;
};

/// Aggregate over all patterns of one length for one scheme.
///
/// Counts are totals over the patterns; time_ms and fp_per_window are
/// per-pattern means. speedup/gain are empty when the FCT denominator is
/// missing or zero.
struct BenchRow {
  FilterScheme scheme = FilterScheme::binary();
  std::size_t m = 0;
  bool skipped = false;
  double time_ms = 0;
  std::size_t candidates = 0;
  std::size_t occurrences = 0;
  std::size_t false_positives = 0;
  double fp_per_window = 0;
  std::optional<double> speedup_vs_fct{};
  std::optional<double> gain_pct{};
  std::uint64_t occurrence_checksum = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;  // oracle or cross-scheme mismatches

  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }

  [[nodiscard]] const BenchRow* find(const FilterScheme& s, std::size_t m) const noexcept {
    for (const auto& r : rows)
      if (r.scheme == s && r.m == m) return &r;
    return nullptr;
  }
};

[[nodiscard]] inline std::optional<double> speedup(double fct_time, double time) {
  if (!(fct_time > 0) || !(time > 0)) return std::nullopt;
  return fct_time / time;
}

[[nodiscard]] inline std::optional<double> gain_pct(double fct_fp, double fp) {
  if (!(fct_fp > 0)) return std::nullopt;
  return 100.0 * (fct_fp - fp) / fct_fp;
}

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  // FNV-1a over the 8 bytes of v.
  for (int b = 0; b < 8; ++b) {
    h ^= (v >> (8 * b)) & 0xffu;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline double median_ms(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace detail

/// Locale-independent fixed-point rendering.
[[nodiscard]] inline std::string format_fixed(double v, int precision) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, end);
}

/// Pattern seed for length m; shared by every scheme so all schemes see the same patterns.
[[nodiscard]] inline std::uint64_t pattern_seed(std::uint64_t seed, std::size_t m) noexcept {
  return seed * 0x9e3779b97f4a7c15ull + m;
}

/// Runs every (length, scheme) cell over patterns extracted from `text`.
template <Element T>
[[nodiscard]] BenchResult run_bench(const Sequence<T>& text, const BenchConfig& cfg) {
  using clock = std::chrono::steady_clock;
  BenchResult result;
  const std::size_t reps = std::max<std::size_t>(cfg.reps, 1);

  for (std::size_t m : cfg.lengths) {
    if (m < 2 || m > text.size()) {
      result.warnings.push_back("pattern length " + std::to_string(m) + " skipped: needs 2 <= m <= n");
      for (const auto& s : cfg.schemes) result.rows.push_back({.scheme = s, .m = m, .skipped = true});
      continue;
    }
    const auto patterns =
        extract_patterns(text, m, std::max<std::size_t>(cfg.patterns_per_length, 1), pattern_seed(cfg.seed, m));

    std::vector<std::vector<std::size_t>> oracle;
    if (cfg.verify) {
      oracle.reserve(patterns.size());
      for (const auto& p : patterns) oracle.push_back(brute_force_search(p, text));
    }

    const std::size_t first_row = result.rows.size();
    for (const auto& scheme : cfg.schemes) {
      BenchRow row{.scheme = scheme, .m = m};
      if (m <= scheme.shrink()) {
        row.skipped = true;
        result.warnings.push_back(scheme.name() + " skipped at m=" + std::to_string(m) + ": requires m > q");
        result.rows.push_back(row);
        continue;
      }
      double time_sum = 0, fp_sum = 0;
      std::uint64_t checksum = 0xcbf29ce484222325ull;
      for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        const auto searcher = Searcher<T>::preprocess(patterns[pi], scheme);
        const SearchReport rep = searcher.search(text);  // warm-up; its counts are reported
        std::vector<double> times(reps);
        for (auto& t : times) {
          const auto t0 = clock::now();
          (void)searcher.search(text);
          t = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        }
        time_sum += detail::median_ms(std::move(times));
        fp_sum += fp_per_window(rep, cfg.fp_window);
        row.candidates += rep.candidates;
        row.occurrences += rep.occurrences.size();
        row.false_positives += rep.false_positives;
        checksum = detail::mix(checksum, pi);
        for (std::size_t pos : rep.occurrences) checksum = detail::mix(checksum, pos);
        if (cfg.verify && rep.occurrences != oracle[pi]) {
          result.failures.push_back(scheme.name() + " m=" + std::to_string(m) + " pattern " +
                                    std::to_string(pi) + ": occurrences differ from oracle");
        }
      }
      const auto count = static_cast<double>(patterns.size());
      row.time_ms = time_sum / count;
      row.fp_per_window = fp_sum / count;
      row.occurrence_checksum = checksum;
      result.rows.push_back(row);
    }

    // Relative columns against the FCT row of the same length.
    const BenchRow* fct = nullptr;
    const BenchRow* reference = nullptr;
    for (std::size_t r = first_row; r < result.rows.size(); ++r) {
      const auto& row = result.rows[r];
      if (row.skipped) continue;
      if (!reference) reference = &row;
      if (row.scheme.kind() == FilterKind::binary) fct = &row;
    }
    for (std::size_t r = first_row; r < result.rows.size(); ++r) {
      auto& row = result.rows[r];
      if (row.skipped) continue;
      if (fct) {
        row.speedup_vs_fct = speedup(fct->time_ms, row.time_ms);
        row.gain_pct = gain_pct(fct->fp_per_window, row.fp_per_window);
      }
      if (row.occurrence_checksum != reference->occurrence_checksum) {
        result.failures.push_back(row.scheme.name() + " m=" + std::to_string(m) +
                                  ": occurrence checksum differs across schemes");
      }
    }
  }
  return result;
}

inline constexpr const char* csv_header =
    "scheme,q,m,time_ms,candidates,occurrences,false_positives,fp_per_2e20,speedup_vs_fct,gain_pct";

/// Machine-readable rows; empty fields for null or skipped values.
[[nodiscard]] inline std::string emit_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(csv_header) + "\n";
  for (const auto& r : rows) {
    out += r.scheme.name() + "," + std::to_string(r.scheme.q()) + "," + std::to_string(r.m) + ",";
    if (r.skipped) {
      out += ",,,,,,\n";
      continue;
    }
    out += format_fixed(r.time_ms, 4) + "," + std::to_string(r.candidates) + "," +
           std::to_string(r.occurrences) + "," + std::to_string(r.false_positives) + "," +
           format_fixed(r.fp_per_window, 2) + ",";
    if (r.speedup_vs_fct) out += format_fixed(*r.speedup_vs_fct, 3);
    out += ",";
    if (r.gain_pct) out += format_fixed(*r.gain_pct, 2);
    out += "\n";
  }
  return out;
}

/// Two blocks in the layout of the published tables: running times (FCT in
/// ms, others as speedup) above false positives (FCT per window, others as
/// gain %). "-" marks empty cells.
[[nodiscard]] inline std::string emit_table(const std::vector<BenchRow>& rows) {
  std::vector<std::size_t> lengths;
  std::vector<FilterScheme> schemes;
  for (const auto& r : rows) {
    if (std::find(lengths.begin(), lengths.end(), r.m) == lengths.end()) lengths.push_back(r.m);
    if (std::find(schemes.begin(), schemes.end(), r.scheme) == schemes.end()) schemes.push_back(r.scheme);
  }
  auto cell = [&](std::size_t m, const FilterScheme& s) -> const BenchRow* {
    for (const auto& r : rows)
      if (r.m == m && r.scheme == s && !r.skipped) return &r;
    return nullptr;
  };

  std::ostringstream os;
  auto header = [&](const char* title) {
    os << title << "\n" << std::setw(4) << "m";
    for (const auto& s : schemes) os << std::setw(11) << s.name();
    os << "\n";
  };

  header("# running time: fct in ms, others speedup vs fct");
  for (std::size_t m : lengths) {
    os << std::setw(4) << m;
    for (const auto& s : schemes) {
      const BenchRow* r = cell(m, s);
      std::string v = "-";
      if (r && s.kind() == FilterKind::binary) v = format_fixed(r->time_ms, 2);
      else if (r && r->speedup_vs_fct) v = format_fixed(*r->speedup_vs_fct, 2);
      os << std::setw(11) << v;
    }
    os << "\n";
  }
  header("# false positives: fct per window, others gain % vs fct");
  for (std::size_t m : lengths) {
    os << std::setw(4) << m;
    for (const auto& s : schemes) {
      const BenchRow* r = cell(m, s);
      std::string v = "-";
      if (r && s.kind() == FilterKind::binary) v = format_fixed(r->fp_per_window, 2);
      else if (r && r->gain_pct) v = format_fixed(*r->gain_pct, 1);
      os << std::setw(11) << v;
    }
    os << "\n";
  }
  return os.str();
}

enum class OutputFormat : std::uint8_t { csv, table };

[[nodiscard]] inline std::string emit(const std::vector<BenchRow>& rows, OutputFormat format) {
  return format == OutputFormat::csv ? emit_csv(rows) : emit_table(rows);
}

}  // namespace oppm
