#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "oppm/core.hpp"

namespace oppm {

enum class CorpusKind : std::uint8_t { rand_delta, period_delta };

struct GenSpec {
  CorpusKind kind = CorpusKind::rand_delta;
  std::size_t n = std::size_t{1} << 20;
  std::int64_t delta = 20;
  std::uint64_t seed = 1;
};

/// Seeded integer source shared by all generators.
///
/// Raw words come from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Ranges are reduced by rejection sampling (never by a
/// library distribution, whose algorithm is implementation-defined), so a
/// given seed yields the same corpus on every platform.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Period-10 base profile: round(100 + 100 sin(2 pi k / 10)).
inline constexpr std::array<std::int64_t, 10> period_profile = {100, 159, 195, 195, 159,
                                                                100, 41,  5,   5,   41};

namespace detail {

template <Element T>
Sequence<T> to_sequence(const std::vector<std::int64_t>& draws) {
  std::vector<T> out(draws.size());
  std::transform(draws.begin(), draws.end(), out.begin(),
                 [](std::int64_t v) { return static_cast<T>(v); });
  return Sequence<T>(std::move(out));
}

}  // namespace detail

/// Integer draws behind gen_rand_delta, independent of the element domain.
inline std::vector<std::int64_t> rand_delta_draws(std::size_t n, std::int64_t delta,
                                                  std::uint64_t seed) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  CorpusRng rng(seed);
  std::vector<std::int64_t> v(n);
  for (auto& e : v) e = rng.uniform(100 - delta, 100 + delta);
  return v;
}

inline std::vector<std::int64_t> period_delta_draws(std::size_t n, std::int64_t delta,
                                                    std::uint64_t seed) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  CorpusRng rng(seed);
  std::vector<std::int64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t noise = rng.uniform(-delta, delta);
    v[i] = std::clamp<std::int64_t>(period_profile[i % 10] + noise, 0, 200 + delta);
  }
  return v;
}

/// Uniform values in [100 - delta, 100 + delta].
template <Element T>
[[nodiscard]] Sequence<T> gen_rand_delta(std::size_t n, std::int64_t delta, std::uint64_t seed) {
  if constexpr (std::is_integral_v<T>) {
    if (delta > 100) throw std::invalid_argument("delta must not exceed 100 for integer texts");
  }
  return detail::to_sequence<T>(rand_delta_draws(n, delta, seed));
}

/// Period-10 profile plus uniform noise in [-delta, delta], clamped to [0, 200 + delta].
template <Element T>
[[nodiscard]] Sequence<T> gen_period_delta(std::size_t n, std::int64_t delta,
                                           std::uint64_t seed) {
  return detail::to_sequence<T>(period_delta_draws(n, delta, seed));
}

template <Element T>
[[nodiscard]] Sequence<T> generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be positive");
  return spec.kind == CorpusKind::rand_delta ? gen_rand_delta<T>(spec.n, spec.delta, spec.seed)
                                             : gen_period_delta<T>(spec.n, spec.delta, spec.seed);
}

/// A pattern cut from a text, with its source position.
template <Element T>
struct ExtractedPattern {
  Sequence<T> pattern;
  std::size_t source = 0;
};

/// `count` windows of length m at uniformly random start positions.
template <Element T>
[[nodiscard]] std::vector<ExtractedPattern<T>> extract_patterns_at(const Sequence<T>& y,
                                                                   std::size_t m,
                                                                   std::size_t count,
                                                                   std::uint64_t seed) {
  if (m == 0 || m > y.size()) throw std::invalid_argument("pattern length exceeds text");
  if (count < 1) throw std::invalid_argument("count must be positive");
  CorpusRng rng(seed);
  std::vector<ExtractedPattern<T>> out;
  out.reserve(count);
  const auto last = static_cast<std::int64_t>(y.size() - m);
  for (std::size_t c = 0; c < count; ++c) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, last));
    out.push_back({y.slice(i, i + m - 1), i});
  }
  return out;
}

template <Element T>
[[nodiscard]] std::vector<Sequence<T>> extract_patterns(const Sequence<T>& y, std::size_t m,
                                                        std::size_t count, std::uint64_t seed) {
  std::vector<Sequence<T>> out;
  for (auto& p : extract_patterns_at(y, m, count, seed)) out.push_back(std::move(p.pattern));
  return out;
}

}  // namespace oppm
