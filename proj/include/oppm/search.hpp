#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oppm/core.hpp"
#include "oppm/filters.hpp"
#include "oppm/match.hpp"

namespace oppm {

/// Outcome of one filtered search.
struct SearchReport {
  std::vector<std::size_t> occurrences;
  std::size_t candidates = 0;
  std::size_t false_positives = 0;
  std::size_t text_len = 0;
  std::chrono::nanoseconds filter_time{0};
  std::chrono::nanoseconds verify_time{0};
};

namespace detail {

// Calls f with a position -> symbol accessor that encodes y on demand.
// The scheme kind is resolved once, outside the scan loop.
template <Element T, typename F>
decltype(auto) with_text_encoder(const FilterScheme& scheme, std::span<const T> y, F&& f) {
  const T* base = y.data();
  const int q = scheme.q();
  switch (scheme.kind()) {
    case FilterKind::nr:
      return f([base, q](std::size_t i) { return nr_code(base + i, q); });
    case FilterKind::no:
      return f([base, q](std::size_t i) { return no_code(base + i, q); });
    case FilterKind::binary:
    default:
      return f([base](std::size_t i) -> Symbol { return base[i] >= base[i + 1] ? 1 : 0; });
  }
}

}  // namespace detail

/// A pattern preprocessed for filtered order-preserving search.
///
/// Holds the rank table for verification, the condensed pattern and its
/// compiled SBNDM2 program. A one-symbol condensed pattern falls back to the
/// naive matcher.
template <Element T>
class Searcher {
 public:
  static Searcher preprocess(std::span<const T> x, const FilterScheme& scheme) {
    if (x.size() < 2) throw std::invalid_argument("pattern too short for scheme");
    Searcher s(scheme);
    s.pattern_len_ = x.size();
    s.ranks_ = rank_table(x);
    s.condensed_ = encode(x, scheme);
    if (s.condensed_.size() >= 2) s.program_ = compile(s.condensed_);
    return s;
  }

  static Searcher preprocess(const Sequence<T>& x, const FilterScheme& scheme) {
    return preprocess(x.view(), scheme);
  }

  /// Text positions whose condensed window equals the condensed pattern.
  [[nodiscard]] std::vector<std::size_t> candidates(std::span<const T> y) const {
    if (y.size() < pattern_len_) return {};
    const std::size_t n = y.size() - scheme_.shrink();
    return detail::with_text_encoder(scheme_, y, [&](auto at) {
      return program_ ? find_candidates(*program_, n, at) : naive_find(condensed_, n, at);
    });
  }

  [[nodiscard]] std::vector<std::size_t> candidates(const Sequence<T>& y) const {
    return candidates(y.view());
  }

  [[nodiscard]] SearchReport search(std::span<const T> y) const {
    using clock = std::chrono::steady_clock;
    SearchReport rep;
    rep.text_len = y.size();
    if (y.size() < pattern_len_) return rep;

    const auto t0 = clock::now();
    const std::vector<std::size_t> cand = candidates(y);
    const auto t1 = clock::now();
    for (std::size_t i : cand)
      if (matches_window(ranks_, y, i)) rep.occurrences.push_back(i);
    const auto t2 = clock::now();

    rep.candidates = cand.size();
    rep.false_positives = cand.size() - rep.occurrences.size();
    rep.filter_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
    rep.verify_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1);
    return rep;
  }

  [[nodiscard]] SearchReport search(const Sequence<T>& y) const { return search(y.view()); }

  [[nodiscard]] const FilterScheme& scheme() const noexcept { return scheme_; }
  [[nodiscard]] const RankTable& ranks() const noexcept { return ranks_; }
  [[nodiscard]] const CondensedSequence& condensed_pattern() const noexcept { return condensed_; }
  [[nodiscard]] bool uses_sbndm() const noexcept { return program_.has_value(); }
  [[nodiscard]] std::size_t pattern_length() const noexcept { return pattern_len_; }

 private:
  explicit Searcher(FilterScheme scheme) : scheme_(scheme) {}

  FilterScheme scheme_;
  std::size_t pattern_len_ = 0;
  RankTable ranks_;
  CondensedSequence condensed_;
  std::optional<MatcherProgram> program_;
};

template <Element T>
[[nodiscard]] Searcher<T> preprocess(const Sequence<T>& x, const FilterScheme& scheme) {
  return Searcher<T>::preprocess(x, scheme);
}

template <Element T>
[[nodiscard]] SearchReport search(const Searcher<T>& s, const Sequence<T>& y) {
  return s.search(y);
}

/// Reference searcher: pairwise isomorphism test at every window.
template <Element T>
[[nodiscard]] std::vector<std::size_t> brute_force_search(std::span<const T> x,
                                                          std::span<const T> y) {
  std::vector<std::size_t> out;
  const std::size_t m = x.size();
  if (m == 0 || y.size() < m) return out;
  for (std::size_t i = 0; i + m <= y.size(); ++i)
    if (brute_force_isomorphic(x, y.subspan(i, m))) out.push_back(i);
  return out;
}

template <Element T>
[[nodiscard]] std::vector<std::size_t> brute_force_search(const Sequence<T>& x,
                                                          const Sequence<T>& y) {
  return brute_force_search(x.view(), y.view());
}

/// False positives scaled to a fixed text length (2^20 by default).
[[nodiscard]] inline double fp_per_window(const SearchReport& rep,
                                          std::size_t window = std::size_t{1} << 20) {
  if (rep.text_len == 0) throw std::invalid_argument("empty text");
  return static_cast<double>(rep.false_positives) * static_cast<double>(window) /
         static_cast<double>(rep.text_len);
}

}  // namespace oppm
