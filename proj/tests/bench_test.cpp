#include <gtest/gtest.h>

#include <sstream>

#include "oppm/bench.hpp"
#include "oppm/selftest.hpp"

namespace oppm {
namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string f;
  std::istringstream is(line);
  while (std::getline(is, f, ',')) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

TEST(Formulas, GainAndSpeedup) {
  // A 99.6% gain over 15713.46 leaves 62.85 false positives.
  EXPECT_NEAR(*gain_pct(15713.46, 62.85), 99.6, 0.01);
  EXPECT_NEAR(44.29 / 2.0, 22.145, 1e-12);
  EXPECT_NEAR(*speedup(44.29, 22.145), 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(*gain_pct(200, 2), 99.0);
  EXPECT_FALSE(gain_pct(0, 0).has_value());
  EXPECT_FALSE(speedup(1.0, 0).has_value());
}

BenchConfig small_config() {
  BenchConfig cfg;
  cfg.lengths = {4, 8, 12};
  cfg.patterns_per_length = 10;
  cfg.reps = 1;
  cfg.verify = true;
  return cfg;
}

TEST(RunBench, VerifiesAndAgreesAcrossSchemes) {
  const auto text = gen_rand_delta<std::int32_t>(20'000, 20, 5);
  const auto res = run_bench(text, small_config());
  EXPECT_TRUE(res.ok()) << (res.failures.empty() ? "" : res.failures.front());
  ASSERT_EQ(res.rows.size(), 3u * default_schemes().size());
  for (const auto& r : res.rows) {
    if (r.skipped) continue;
    const BenchRow* fct = res.find(FilterScheme::binary(), r.m);
    ASSERT_NE(fct, nullptr);
    EXPECT_EQ(r.occurrence_checksum, fct->occurrence_checksum);
    EXPECT_EQ(r.occurrences, fct->occurrences);
    EXPECT_EQ(r.false_positives, r.candidates - r.occurrences);
    EXPECT_GE(r.occurrences, 10u);  // each pattern finds at least its source
    if (r.gain_pct) {
      EXPECT_LE(*r.gain_pct, 100.0);
      if (r.fp_per_window <= fct->fp_per_window) {
        EXPECT_GE(*r.gain_pct, 0.0);
      }
    }
  }
}

TEST(RunBench, SkipsLengthsNotAboveQ) {
  const auto text = gen_rand_delta<std::int32_t>(5000, 20, 5);
  const auto res = run_bench(text, small_config());
  EXPECT_TRUE(res.find(FilterScheme::nr(4), 4)->skipped);
  EXPECT_TRUE(res.find(FilterScheme::nr(6), 4)->skipped);
  EXPECT_FALSE(res.find(FilterScheme::nr(3), 4)->skipped);
  EXPECT_FALSE(res.warnings.empty());
}

TEST(Emit, CsvLayoutAndDeterminism) {
  const auto text = gen_period_delta<std::int32_t>(20'000, 5, 2);
  const auto a = emit_csv(run_bench(text, small_config()).rows);
  const auto b = emit_csv(run_bench(text, small_config()).rows);
  const auto la = lines(a), lb = lines(b);
  ASSERT_EQ(la.size(), 1 + 3 * default_schemes().size());
  EXPECT_EQ(la[0], "scheme,q,m,time_ms,candidates,occurrences,false_positives,fp_per_2e20,speedup_vs_fct,gain_pct");
  for (std::size_t i = 1; i < la.size(); ++i) {
    auto fa = fields(la[i]), fb = fields(lb[i]);
    ASSERT_EQ(fa.size(), 10u) << la[i];
    fa[3] = fb[3] = "";  // time_ms
    fa[8] = fb[8] = "";  // speedup_vs_fct
    EXPECT_EQ(fa, fb);
  }
}

TEST(Emit, DashWhenFctHasNoFalsePositives) {
  BenchRow fct{.scheme = FilterScheme::binary(), .m = 28, .time_ms = 11.0, .fp_per_window = 0};
  fct.speedup_vs_fct = 1.0;
  BenchRow nr{.scheme = FilterScheme::nr(2), .m = 28, .time_ms = 10.0, .fp_per_window = 0};
  nr.speedup_vs_fct = 1.1;
  const std::string table = emit_table({fct, nr});
  const auto ls = lines(table);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_NE(ls[2].find("11.00"), std::string::npos);
  EXPECT_NE(ls[2].find("1.10"), std::string::npos);
  EXPECT_NE(ls[5].find("0.00"), std::string::npos);
  EXPECT_EQ(ls[5].back(), '-');
  EXPECT_EQ(fields(lines(emit_csv({fct, nr}))[2]).back(), "");
}

TEST(Emit, SkippedRowsKeepRowCount) {
  BenchRow skipped{.scheme = FilterScheme::no(4), .m = 4, .skipped = true};
  const auto ls = lines(emit(std::vector<BenchRow>{skipped}, OutputFormat::csv));
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[1], "no4,4,4,,,,,,,");
}

TEST(Emit, FixedFormattingIsLocaleFree) {
  EXPECT_EQ(format_fixed(1234.5678, 2), "1234.57");
  EXPECT_EQ(format_fixed(0.0, 1), "0.0");
}

TEST(Selftest, PassesOnFreshBuild) {
  const auto rep = run_selftest();
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(rep.ok());
}

TEST(Selftest, NamesMutatedNrBitOrder) {
  SelftestEncoders enc;
  // Least significant bit first instead of most significant first.
  enc.nr = [](std::span<const std::int64_t> x, int q) {
    auto c = nr_encode(x, q);
    for (auto& s : c.symbols) {
      unsigned r = 0;
      for (int b = 0; b < q; ++b) r |= ((s >> b) & 1u) << (q - 1 - b);
      s = static_cast<Symbol>(r);
    }
    return c;
  };
  const auto rep = run_selftest(enc);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.find("NR q=4 golden encoding")->passed);
  EXPECT_FALSE(rep.find("bit-prefix law")->passed);
  EXPECT_TRUE(rep.find("NO q=3 golden encoding")->passed);
  std::ostringstream os;
  print_selftest(rep, os);
  EXPECT_NE(os.str().find("FAIL NR q=4 golden encoding"), std::string::npos);
}

TEST(Selftest, NamesBrokenNoEncoder) {
  SelftestEncoders enc;
  enc.no = [](std::span<const std::int64_t> x, int q) {
    auto c = no_encode(x, q);
    for (auto& s : c.symbols) s = static_cast<Symbol>(s ^ 1u);
    return c;
  };
  const auto rep = run_selftest(enc);
  EXPECT_FALSE(rep.find("NO q=3 golden encoding")->passed);
  EXPECT_FALSE(rep.find("scheme collapse at q=1")->passed);
}

}  // namespace
}  // namespace oppm
