#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oppm/core.hpp"
#include "oppm/filters.hpp"
#include "oppm/match.hpp"
#include "oppm/search.hpp"

namespace oppm {

/// Encoders exercised by the self test. Tests swap these out to check that a
/// broken transform is caught and named.
struct SelftestEncoders {
  using Fn = std::function<CondensedSequence(std::span<const std::int64_t>, int)>;
  Fn nr = [](std::span<const std::int64_t> x, int q) { return nr_encode(x, q); };
  Fn no = [](std::span<const std::int64_t> x, int q) { return no_encode(x, q); };
  std::function<CondensedSequence(std::span<const std::int64_t>)> binary =
      [](std::span<const std::int64_t> x) { return binary_encode(x); };
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  [[nodiscard]] bool ok() const noexcept {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  [[nodiscard]] const SelftestCheck* find(const std::string& name) const noexcept {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

using I64Seq = Sequence<std::int64_t>;

inline std::vector<Symbol> syms(std::initializer_list<int> v) {
  return std::vector<Symbol>(v.begin(), v.end());
}

inline I64Seq random_seq(std::mt19937_64& rng, std::size_t n, std::int64_t alphabet) {
  std::vector<std::int64_t> v(n);
  for (auto& e : v) e = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(alphabet));
  return I64Seq(std::move(v));
}

}  // namespace detail

/// Runs the golden examples and a fixed-seed randomized property suite.
[[nodiscard]] inline SelftestReport run_selftest(const SelftestEncoders& enc = {}) {
  using detail::I64Seq;
  SelftestReport rep;
  auto check = [&](std::string name, auto&& body) {
    SelftestCheck c{std::move(name), false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
  };

  const I64Seq ranked{6, 3, 8, 3, 10, 7, 10};
  const I64Seq ranked_peer{2, 1, 4, 1, 5, 3, 5};
  const I64Seq neighborhood{5, 6, 3, 8, 10, 7, 1, 9, 10, 8};
  const I64Seq zigzag_pattern{6, 5, 8, 4, 7};
  const I64Seq zigzag_text{8, 11, 10, 16, 15, 20, 13, 17, 14, 18, 20, 18, 25, 17, 20, 25, 26};

  check("rank table with ties", [&](std::string& d) {
    const RankTable rt = rank_table(ranked);
    d = "expected order 1,3,0,5,2,4,6 and equal 1,0,0,0,0,1";
    return rt.order == std::vector<std::uint32_t>{1, 3, 0, 5, 2, 4, 6} &&
           rt.equal == std::vector<std::uint8_t>{1, 0, 0, 0, 0, 1};
  });
  check("rank table distinct", [&](std::string& d) {
    d = "expected order 3,1,0,4,2";
    return rank_table(zigzag_pattern).order == std::vector<std::uint32_t>{3, 1, 0, 4, 2};
  });
  check("isomorphism with ties", [&](std::string& d) {
    d = "pattern and peer must be order-isomorphic";
    return is_isomorphic_at(rank_table(ranked), ranked_peer, 0) &&
           brute_force_isomorphic(ranked, ranked_peer);
  });
  check("NR q=4 golden encoding", [&](std::string& d) {
    const auto got = enc.nr(neighborhood.view(), 4);
    d = "expected 4,8,1,6,15,8";
    return got.symbols == detail::syms({4, 8, 1, 6, 15, 8}) && got.alphabet_size == 16;
  });
  check("NO q=3 golden encoding", [&](std::string& d) {
    const auto got = enc.no(neighborhood.view(), 3);
    d = "expected 20,32,3,31,60,32,3";
    return got.symbols == detail::syms({20, 32, 3, 31, 60, 32, 3}) && got.alphabet_size == 64;
  });
  check("zigzag text occurrences", [&](std::string& d) {
    d = "every scheme must report exactly {3}";
    std::vector<FilterScheme> schemes{FilterScheme::binary()};
    for (int q = 1; q <= 4; ++q) schemes.push_back(FilterScheme::nr(q));
    for (int q = 1; q <= 3; ++q) schemes.push_back(FilterScheme::no(q));
    for (const auto& s : schemes)
      if (Searcher<std::int64_t>::preprocess(zigzag_pattern, s).search(zigzag_text).occurrences !=
          std::vector<std::size_t>{3})
        return false;
    return brute_force_search(zigzag_pattern, zigzag_text) == std::vector<std::size_t>{3};
  });

  std::mt19937_64 rng(20140731);
  check("bit-prefix law", [&](std::string& d) {
    for (int trial = 0; trial < 200; ++trial) {
      const I64Seq x = detail::random_seq(rng, 6 + trial % 20, trial % 2 ? 4 : 1000);
      for (int q = 1; q <= 4 && static_cast<std::size_t>(q) < x.size(); ++q) {
        const auto no = enc.no(x.view(), q);
        const auto nr = enc.nr(x.view(), q);
        for (std::size_t i = 0; i < no.size(); ++i)
          if ((no[i] >> (q * (q - 1) / 2)) != nr[i]) {
            d = "q=" + std::to_string(q) + " position " + std::to_string(i);
            return false;
          }
      }
    }
    return true;
  });
  check("scheme collapse at q=1", [&](std::string& d) {
    for (int trial = 0; trial < 200; ++trial) {
      const I64Seq x = detail::random_seq(rng, 2 + trial % 30, trial % 2 ? 3 : 1000);
      const auto b = enc.binary(x.view()).symbols;
      if (enc.nr(x.view(), 1).symbols != b || enc.no(x.view(), 1).symbols != b) {
        d = "trial " + std::to_string(trial);
        return false;
      }
    }
    return true;
  });
  check("monotone-map invariance", [&](std::string& d) {
    for (int trial = 0; trial < 200; ++trial) {
      const I64Seq x = detail::random_seq(rng, 8 + trial % 16, trial % 2 ? 5 : 1000);
      std::vector<std::int64_t> mapped(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) mapped[i] = 3 * x[i] * x[i] + 7;  // increasing on x >= 0
      const I64Seq y(std::move(mapped));
      for (int q = 1; q <= 4; ++q)
        if (enc.nr(x.view(), q) != enc.nr(y.view(), q) || enc.no(x.view(), q) != enc.no(y.view(), q)) {
          d = "trial " + std::to_string(trial) + " q=" + std::to_string(q);
          return false;
        }
    }
    return true;
  });
  check("streaming equals batch", [&](std::string& d) {
    for (int trial = 0; trial < 100; ++trial) {
      const I64Seq x = detail::random_seq(rng, 10 + trial, trial % 2 ? 3 : 1000);
      for (const auto& s : {FilterScheme::binary(), FilterScheme::nr(3), FilterScheme::no(4)}) {
        StreamEncoder<std::int64_t> se(s);
        std::vector<Symbol> got;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (auto sym = se.push(x[i])) got.push_back(*sym);
        if (got != encode(x, s).symbols) {
          d = s.name() + " trial " + std::to_string(trial);
          return false;
        }
      }
    }
    return true;
  });
  check("matcher equivalence", [&](std::string& d) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint32_t sigma = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 16 : 1024);
      CondensedSequence p{{}, sigma, 1}, t{{}, sigma, 1};
      p.symbols.resize(2 + trial % 90);
      t.symbols.resize(200 + trial * 7);
      const std::uint32_t used = std::min<std::uint32_t>(sigma, trial % 2 ? 2 : sigma);
      for (auto& c : p.symbols) c = static_cast<Symbol>(rng() % used);
      for (auto& c : t.symbols) c = static_cast<Symbol>(rng() % used);
      if (find_candidates(compile(p), t) != naive_find(p, t)) {
        d = "trial " + std::to_string(trial);
        return false;
      }
    }
    return true;
  });
  check("oracle equivalence", [&](std::string& d) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t m = 2 + trial % 11;
      const I64Seq y = detail::random_seq(rng, m + 400, trial % 2 ? 3 : 1 << 20);
      const std::size_t at = rng() % (y.size() - m + 1);
      const I64Seq x = trial % 3 ? y.slice(at, at + m - 1) : detail::random_seq(rng, m, 3);
      const auto expected = brute_force_search(x, y);
      for (const auto& s : {FilterScheme::binary(), FilterScheme::nr(3), FilterScheme::no(2)}) {
        if (m <= s.shrink()) continue;
        if (Searcher<std::int64_t>::preprocess(x, s).search(y).occurrences != expected) {
          d = s.name() + " trial " + std::to_string(trial);
          return false;
        }
      }
    }
    return true;
  });
  return rep;
}

inline void print_selftest(const SelftestReport& rep, std::ostream& os) {
  for (const auto& c : rep.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
}

}  // namespace oppm
