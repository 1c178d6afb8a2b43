#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace oppm {

/// Element domains supported by the library: 32/64-bit signed integers and doubles.
template <typename T>
concept Element = std::same_as<T, std::int32_t> || std::same_as<T, std::int64_t> ||
                  std::same_as<T, double>;

/// An immutable numeric series (text or pattern).
///
/// Construction rejects NaN so that every pair of elements is comparable.
template <Element T>
class Sequence {
 public:
  using value_type = T;

  Sequence() = default;

  explicit Sequence(std::vector<T> elems) : elems_(std::move(elems)) { validate(); }

  Sequence(std::initializer_list<T> elems) : elems_(elems) { validate(); }

  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] const T& operator[](std::size_t i) const noexcept { return elems_[i]; }

  [[nodiscard]] std::span<const T> view() const noexcept { return elems_; }
  operator std::span<const T>() const noexcept { return elems_; }  // NOLINT

  /// Inclusive slice x[first..last].
  [[nodiscard]] Sequence slice(std::size_t first, std::size_t last) const {
    if (first > last || last >= elems_.size()) throw std::out_of_range("slice out of range");
    return Sequence(std::vector<T>(elems_.begin() + static_cast<std::ptrdiff_t>(first),
                                   elems_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
  }

  [[nodiscard]] const std::vector<T>& elements() const noexcept { return elems_; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  void validate() const {
    if constexpr (std::is_floating_point_v<T>) {
      if (std::any_of(elems_.begin(), elems_.end(), [](T v) { return std::isnan(v); }))
        throw std::invalid_argument("NaN is not an ordered element");
    }
  }

  std::vector<T> elems_;
};

/// Rank permutation and equality bits of a pattern.
///
/// `order[k]` is the index of the k-th smallest element (ties broken by
/// position); `equal[k]` is 1 when the elements at `order[k]` and
/// `order[k+1]` compare equal.
struct RankTable {
  std::vector<std::uint32_t> order;
  std::vector<std::uint8_t> equal;

  [[nodiscard]] std::size_t length() const noexcept { return order.size(); }

  friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Builds the rank table of `x` with a stable index sort, O(m log m).
template <Element T>
[[nodiscard]] RankTable rank_table(std::span<const T> x) {
  if (x.empty()) throw std::invalid_argument("empty pattern");
  RankTable rt;
  rt.order.resize(x.size());
  std::iota(rt.order.begin(), rt.order.end(), std::uint32_t{0});
  std::stable_sort(rt.order.begin(), rt.order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return x[a] < x[b]; });
  rt.equal.resize(x.size() - 1);
  for (std::size_t k = 0; k + 1 < x.size(); ++k)
    rt.equal[k] = x[rt.order[k]] == x[rt.order[k + 1]] ? 1 : 0;
  return rt;
}

template <Element T>
[[nodiscard]] RankTable rank_table(const Sequence<T>& x) {
  return rank_table(x.view());
}

/// Order-isomorphism check of y[i..i+m-1] against a preprocessed pattern.
/// No bounds checking; callers guarantee i + m <= |y|.
template <Element T>
[[nodiscard]] bool matches_window(const RankTable& rt, std::span<const T> y,
                                  std::size_t i) noexcept {
  const T* w = y.data() + i;
  const std::size_t m = rt.order.size();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const T a = w[rt.order[k]];
    const T b = w[rt.order[k + 1]];
    if (a > b) return false;
    if (rt.equal[k] != (a == b ? 1 : 0)) return false;
  }
  return true;
}

/// Checked form of matches_window.
template <Element T>
[[nodiscard]] bool is_isomorphic_at(const RankTable& rt, std::span<const T> y, std::size_t i) {
  if (i > y.size() || rt.length() > y.size() - i)
    throw std::out_of_range("window exceeds text");
  return matches_window(rt, y, i);
}

template <Element T>
[[nodiscard]] bool is_isomorphic_at(const RankTable& rt, const Sequence<T>& y, std::size_t i) {
  return is_isomorphic_at(rt, y.view(), i);
}

/// Pairwise O(m^2) isomorphism test straight from the definition:
/// x[i] <= x[j] iff y[i] <= y[j] for every pair.
template <Element T>
[[nodiscard]] bool brute_force_isomorphic(std::span<const T> x, std::span<const T> y) noexcept {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if ((x[i] <= x[j]) != (y[i] <= y[j])) return false;
  return true;
}

template <Element T>
[[nodiscard]] bool brute_force_isomorphic(const Sequence<T>& x, const Sequence<T>& y) noexcept {
  return brute_force_isomorphic(x.view(), y.view());
}

}  // namespace oppm
