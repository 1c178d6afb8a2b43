#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oppm/core.hpp"

namespace oppm {

/// Condensed-alphabet symbol. 16 bits covers NO up to q=5.
using Symbol = std::uint16_t;

enum class FilterKind : std::uint8_t { binary, nr, no };

/// Selects a filtration transform and its neighborhood size.
class FilterScheme {
 public:
  static constexpr int max_nr_q = 8;
  static constexpr int max_no_q = 5;

  /// The binary up/down transform (the FCT baseline).
  static FilterScheme binary() noexcept { return FilterScheme(FilterKind::binary, 1); }

  static FilterScheme nr(int q) {
    if (q < 1 || q > max_nr_q) throw std::invalid_argument("NR q must be in [1, 8]");
    return FilterScheme(FilterKind::nr, q);
  }

  static FilterScheme no(int q) {
    if (q < 1 || q > max_no_q) throw std::invalid_argument("NO q must be in [1, 5]");
    return FilterScheme(FilterKind::no, q);
  }

  [[nodiscard]] FilterKind kind() const noexcept { return kind_; }
  [[nodiscard]] int q() const noexcept { return q_; }

  /// Trailing source positions consumed by one symbol.
  [[nodiscard]] std::size_t shrink() const noexcept { return static_cast<std::size_t>(q_); }

  /// Number of code bits per symbol.
  [[nodiscard]] int bits() const noexcept {
    switch (kind_) {
      case FilterKind::binary: return 1;
      case FilterKind::nr: return q_;
      case FilterKind::no: return q_ * (q_ + 1) / 2;
    }
    return 0;
  }

  [[nodiscard]] std::uint32_t alphabet_size() const noexcept { return std::uint32_t{1} << bits(); }

  /// "fct", "nr4", "no3", ...
  [[nodiscard]] std::string name() const {
    switch (kind_) {
      case FilterKind::binary: return "fct";
      case FilterKind::nr: return "nr" + std::to_string(q_);
      case FilterKind::no: return "no" + std::to_string(q_);
    }
    return {};
  }

  friend bool operator==(const FilterScheme&, const FilterScheme&) = default;

 private:
  FilterScheme(FilterKind kind, int q) noexcept : kind_(kind), q_(q) {}

  FilterKind kind_;
  int q_;
};

/// A filter-transformed sequence over a small integer alphabet.
struct CondensedSequence {
  std::vector<Symbol> symbols;
  std::uint32_t alphabet_size = 2;
  std::size_t shrink = 1;

  [[nodiscard]] std::size_t size() const noexcept { return symbols.size(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols[i]; }

  friend bool operator==(const CondensedSequence&, const CondensedSequence&) = default;
};

namespace detail {

// Unchecked kernels over a raw window w[0..q]. Shared by the batch, streaming
// and on-demand text encoders.

template <Element T>
inline Symbol nr_code(const T* w, int q) noexcept {
  unsigned d = 0;
  for (int j = 1; j <= q; ++j) d = (d << 1) + (w[0] >= w[j] ? 1u : 0u);
  return static_cast<Symbol>(d);
}

template <Element T>
inline Symbol no_code(const T* w, int q) noexcept {
  unsigned d = 0;
  for (int k = q; k >= 1; --k) {
    const T* v = w + (q - k);
    for (int j = 1; j <= k; ++j) d = (d << 1) + (v[0] >= v[j] ? 1u : 0u);
  }
  return static_cast<Symbol>(d);
}

template <Element T>
inline Symbol code(FilterKind kind, const T* w, int q) noexcept {
  switch (kind) {
    case FilterKind::binary: return w[0] >= w[1] ? 1 : 0;
    case FilterKind::nr: return nr_code(w, q);
    case FilterKind::no: return no_code(w, q);
  }
  return 0;
}

inline void require_q(int q, int max_q) {
  if (q < 1 || q > max_q) throw std::invalid_argument("q out of range");
}

}  // namespace detail

/// 1 if x[i] >= x[j], else 0.
template <Element T>
[[nodiscard]] int beta(std::span<const T> x, std::size_t i, std::size_t j) {
  if (i >= x.size() || j >= x.size()) throw std::out_of_range("index out of range");
  return x[i] >= x[j] ? 1 : 0;
}

/// q-bit neighborhood ranking code of position i, most significant bit first.
template <Element T>
[[nodiscard]] Symbol nr_value(std::span<const T> x, std::size_t i, int q) {
  detail::require_q(q, FilterScheme::max_nr_q);
  if (i >= x.size() || static_cast<std::size_t>(q) >= x.size() - i)
    throw std::out_of_range("neighborhood exceeds sequence");
  return detail::nr_code(x.data() + i, q);
}

/// q(q+1)/2-bit neighborhood ordering code of position i: the NR codes of
/// widths q, q-1, ..., 1 at positions i, i+1, ..., i+q-1, concatenated with
/// the widest block most significant.
template <Element T>
[[nodiscard]] Symbol no_value(std::span<const T> x, std::size_t i, int q) {
  detail::require_q(q, FilterScheme::max_no_q);
  if (i >= x.size() || static_cast<std::size_t>(q) >= x.size() - i)
    throw std::out_of_range("neighborhood exceeds sequence");
  return detail::no_code(x.data() + i, q);
}

/// Batch transform of a whole sequence under `scheme`.
template <Element T>
[[nodiscard]] CondensedSequence encode(std::span<const T> x, const FilterScheme& scheme) {
  const std::size_t shrink = scheme.shrink();
  if (x.size() <= shrink) {
    throw std::invalid_argument(scheme.kind() == FilterKind::binary
                                    ? "sequence too short for scheme"
                                    : "pattern shorter than q+1");
  }
  CondensedSequence out;
  out.alphabet_size = scheme.alphabet_size();
  out.shrink = shrink;
  out.symbols.resize(x.size() - shrink);
  for (std::size_t i = 0; i < out.symbols.size(); ++i)
    out.symbols[i] = detail::code(scheme.kind(), x.data() + i, scheme.q());
  return out;
}

template <Element T>
[[nodiscard]] CondensedSequence binary_encode(std::span<const T> s) {
  return encode(s, FilterScheme::binary());
}

template <Element T>
[[nodiscard]] CondensedSequence nr_encode(std::span<const T> x, int q) {
  return encode(x, FilterScheme::nr(q));
}

template <Element T>
[[nodiscard]] CondensedSequence no_encode(std::span<const T> x, int q) {
  return encode(x, FilterScheme::no(q));
}

// Sequence<T> conveniences; span parameters do not deduce from Sequence.

template <Element T>
[[nodiscard]] int beta(const Sequence<T>& x, std::size_t i, std::size_t j) {
  return beta(x.view(), i, j);
}
template <Element T>
[[nodiscard]] Symbol nr_value(const Sequence<T>& x, std::size_t i, int q) {
  return nr_value(x.view(), i, q);
}
template <Element T>
[[nodiscard]] Symbol no_value(const Sequence<T>& x, std::size_t i, int q) {
  return no_value(x.view(), i, q);
}
template <Element T>
[[nodiscard]] CondensedSequence encode(const Sequence<T>& x, const FilterScheme& scheme) {
  return encode(x.view(), scheme);
}
template <Element T>
[[nodiscard]] CondensedSequence binary_encode(const Sequence<T>& s) {
  return binary_encode(s.view());
}
template <Element T>
[[nodiscard]] CondensedSequence nr_encode(const Sequence<T>& x, int q) {
  return nr_encode(x.view(), q);
}
template <Element T>
[[nodiscard]] CondensedSequence no_encode(const Sequence<T>& x, int q) {
  return no_encode(x.view(), q);
}

/// Online encoder: consumes one element at a time, emitting one symbol per
/// element once the first shrink+1 elements have been seen.
template <Element T>
class StreamEncoder {
 public:
  explicit StreamEncoder(FilterScheme scheme) noexcept : scheme_(scheme) {}

  std::optional<Symbol> push(T e) noexcept {
    const std::size_t width = scheme_.shrink() + 1;
    if (filled_ < width) {
      window_[filled_++] = e;
      if (filled_ < width) return std::nullopt;
    } else {
      for (std::size_t k = 1; k < width; ++k) window_[k - 1] = window_[k];
      window_[width - 1] = e;
    }
    return detail::code(scheme_.kind(), window_.data(), scheme_.q());
  }

  void reset() noexcept { filled_ = 0; }

  [[nodiscard]] const FilterScheme& scheme() const noexcept { return scheme_; }

 private:
  FilterScheme scheme_;
  std::array<T, FilterScheme::max_nr_q + 1> window_{};
  std::size_t filled_ = 0;
};

/// Consumes `e`; returns the symbol it completes, if any.
template <Element T>
std::optional<Symbol> stream_encode(StreamEncoder<T>& enc, T e) noexcept {
  return enc.push(e);
}

}  // namespace oppm
