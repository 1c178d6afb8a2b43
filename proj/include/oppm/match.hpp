#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oppm/filters.hpp"

namespace oppm {

/// Preprocessed SBNDM2 automaton for one condensed pattern.
///
/// Bit j of masks[c] is set iff pattern symbol effective_len-1-j equals c.
/// Patterns longer than the machine word compile their first word_bits
/// symbols; the tail is compared per candidate.
struct MatcherProgram {
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  CondensedSequence pattern;
  std::vector<Word> masks;
  std::size_t effective_len = 0;
  std::size_t full_len = 0;
};

[[nodiscard]] inline MatcherProgram compile(const CondensedSequence& p) {
  if (p.size() < 2) throw std::invalid_argument("pattern too short for engine");
  if (p.alphabet_size == 0 || p.alphabet_size > (std::uint32_t{1} << 16))
    throw std::invalid_argument("alphabet too large for engine");
  MatcherProgram prog;
  prog.pattern = p;
  prog.full_len = p.size();
  prog.effective_len = std::min(p.size(), MatcherProgram::word_bits);
  prog.masks.assign(p.alphabet_size, 0);
  const std::size_t m = prog.effective_len;
  for (std::size_t i = 0; i < m; ++i) {
    if (p[i] >= p.alphabet_size) throw std::invalid_argument("symbol outside alphabet");
    prog.masks[p[i]] |= MatcherProgram::Word{1} << (m - 1 - i);
  }
  return prog;
}

/// SBNDM2 scan over a text of `n` symbols supplied by `at(i)`.
///
/// `at` is only called at positions the automaton reads, so a lazily
/// encoded text is translated on demand. Reports every i where the full
/// pattern occurs, ascending.
template <typename SymbolAt>
[[nodiscard]] std::vector<std::size_t> find_candidates(const MatcherProgram& prog, std::size_t n,
                                                       SymbolAt&& at) {
  using Word = MatcherProgram::Word;
  std::vector<std::size_t> out;
  const std::size_t m = prog.effective_len;
  const std::size_t full = prog.full_len;
  if (m < 2 || n < full) return out;

  // The compiled prefix may only start where the whole pattern still fits.
  const std::size_t limit = n - (full - m);
  const Word* B = prog.masks.data();
  const auto& tail = prog.pattern.symbols;

  std::size_t end = m - 1;
  while (end < limit) {
    Word d = (B[at(end)] << 1) & B[at(end - 1)];
    if (d == 0) {
      end += m - 1;
      continue;
    }
    const std::size_t start = end + 1 - m;
    std::size_t s = end - 1;  // leftmost position read
    while (s > start) {
      d = (d << 1) & B[at(s - 1)];
      if (d == 0) break;
      --s;
    }
    if (d != 0) {
      bool ok = true;
      for (std::size_t k = m; k < full && ok; ++k) ok = at(start + k) == tail[k];
      if (ok) out.push_back(start);
      ++end;
    } else {
      end = s + m - 1;
    }
  }
  return out;
}

[[nodiscard]] inline std::vector<std::size_t> find_candidates(const MatcherProgram& prog,
                                                              const CondensedSequence& t) {
  if (t.alphabet_size != prog.pattern.alphabet_size)
    throw std::invalid_argument("alphabet mismatch");
  const Symbol* sym = t.symbols.data();
  return find_candidates(prog, t.size(), [sym](std::size_t i) { return sym[i]; });
}

/// Sliding-window exact matcher; overlapping matches included.
template <typename SymbolAt>
[[nodiscard]] std::vector<std::size_t> naive_find(const CondensedSequence& p, std::size_t n,
                                                  SymbolAt&& at) {
  std::vector<std::size_t> out;
  const std::size_t m = p.size();
  if (n < m) return out;
  for (std::size_t i = 0; i + m <= n; ++i) {
    std::size_t k = 0;
    while (k < m && at(i + k) == p[k]) ++k;
    if (k == m) out.push_back(i);
  }
  return out;
}

[[nodiscard]] inline std::vector<std::size_t> naive_find(const CondensedSequence& p,
                                                         const CondensedSequence& t) {
  if (t.alphabet_size != p.alphabet_size) throw std::invalid_argument("alphabet mismatch");
  const Symbol* sym = t.symbols.data();
  return naive_find(p, t.size(), [sym](std::size_t i) { return sym[i]; });
}

}  // namespace oppm
