#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mrwlab/error.hpp"
#include "mrwlab/market_mode.hpp"
#include "test_support.hpp"

using namespace mrwlab;

namespace {

MarketModeOptions raw_options() {
  MarketModeOptions opt;
  opt.deseasonalize = false;
  return opt;
}

}  // namespace

TEST_SUITE("market_mode") {

TEST_CASE("single issue reduces to the unit-variance copy") {
  const auto cal = testsup::synthetic_calendar(4, 50);
  const Series r = testsup::series_on(cal, testsup::gaussian(200, 31, 0.0, 2.5));
  const MarketMode mode = compute_market_mode({{"AAA", r}}, raw_options());
  CHECK(mode.n_issues == 1);
  const double sigma = masked_stddev(r);
  for (std::size_t i = 0; i < r.size(); ++i)
    CHECK(mode.series.values[i] == doctest::Approx(r.values[i] / sigma));
  CHECK(masked_stddev(mode.series) == doctest::Approx(1.0));
}

TEST_CASE("antisymmetric pair cancels") {
  const auto cal = testsup::synthetic_calendar(2, 50);
  const Series a = testsup::series_on(cal, testsup::gaussian(100, 37));
  Series b = a;
  for (auto& v : b.values) v = -v;
  const MarketMode mode = compute_market_mode({{"A", a}, {"B", b}}, raw_options());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(mode.series.values[i] == doctest::Approx(0.0).epsilon(0.0));
}

TEST_CASE("scale invariance per issue") {
  const auto cal = testsup::synthetic_calendar(2, 80);
  const Series a = testsup::series_on(cal, testsup::gaussian(160, 41));
  const Series b = testsup::series_on(cal, testsup::gaussian(160, 43, 0.0, 0.5));
  Series b_scaled = b;
  for (auto& v : b_scaled.values) v *= 7.5;
  const MarketMode m1 = compute_market_mode({{"A", a}, {"B", b}}, raw_options());
  const MarketMode m2 = compute_market_mode({{"A", a}, {"B", b_scaled}}, raw_options());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(m1.series.values[i] == doctest::Approx(m2.series.values[i]).epsilon(1e-12));
}

TEST_CASE("permutation invariance of the issue collection") {
  const auto cal = testsup::synthetic_calendar(2, 60);
  std::vector<NamedSeries> issues;
  for (int i = 0; i < 5; ++i)
    issues.push_back({"I" + std::to_string(i),
                      testsup::series_on(cal, testsup::gaussian(120, 100 + i))});
  auto shuffled = issues;
  std::reverse(shuffled.begin(), shuffled.end());
  const MarketMode m1 = compute_market_mode(issues, raw_options());
  const MarketMode m2 = compute_market_mode(shuffled, raw_options());
  for (std::size_t i = 0; i < m1.series.size(); ++i)
    CHECK(m1.series.values[i] == m2.series.values[i]);
}

TEST_CASE("variance of the mode is at most 1") {
  const auto cal = testsup::synthetic_calendar(4, 100);
  std::vector<NamedSeries> issues;
  for (int i = 0; i < 8; ++i)
    issues.push_back({"I" + std::to_string(i),
                      testsup::series_on(cal, testsup::gaussian(400, 200 + i))});
  const MarketMode mode = compute_market_mode(issues, raw_options());
  CHECK(masked_variance(mode.series) <= 1.0 + 1e-9);

  // Perfectly correlated issues attain the bound.
  const Series base = testsup::series_on(cal, testsup::gaussian(400, 300));
  Series doubled = base;
  for (auto& v : doubled.values) v *= 2.0;
  const MarketMode corr = compute_market_mode({{"A", base}, {"B", doubled}}, raw_options());
  CHECK(masked_variance(corr.series) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero-variance issue is rejected by name") {
  const auto cal = testsup::synthetic_calendar(2, 30);
  const Series good = testsup::series_on(cal, testsup::gaussian(60, 51));
  const Series flat = testsup::series_on(cal, std::vector<double>(60, 0.25));
  CHECK_THROWS_WITH_AS(compute_market_mode({{"GOOD", good}, {"FLAT", flat}}, raw_options()),
                       doctest::Contains("FLAT"), Error);
}

TEST_CASE("coverage rule masks undersampled minutes") {
  const auto cal = testsup::synthetic_calendar(2, 30);
  const Series a = testsup::series_on(cal, testsup::gaussian(60, 61));
  Series b = testsup::series_on(cal, testsup::gaussian(60, 63));
  b.mask[5] = 0;

  MarketModeOptions all = raw_options();
  const MarketMode strict = compute_market_mode({{"A", a}, {"B", b}}, all);
  CHECK(strict.series.mask[5] == 0);

  MarketModeOptions half = raw_options();
  half.coverage = 0.5;
  const MarketMode loose = compute_market_mode({{"A", a}, {"B", b}}, half);
  CHECK(loose.series.mask[5] == 1);
  const double sigma_a = masked_stddev(a);
  CHECK(loose.series.values[5] == doctest::Approx(a.values[5] / sigma_a));
}

TEST_CASE("deseasonalized mode has a flat intraday profile") {
  const std::size_t sessions = 300, minutes = 120;
  const auto cal = testsup::synthetic_calendar(sessions, minutes);
  std::vector<NamedSeries> issues;
  for (int i = 0; i < 3; ++i) {
    auto g = testsup::rng(400 + static_cast<std::uint64_t>(i));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> v(sessions * minutes);
    for (std::size_t s = 0; s < sessions; ++s)
      for (std::size_t m = 0; m < minutes; ++m) {
        const double x = 2.0 * static_cast<double>(m) / (minutes - 1.0) - 1.0;
        v[s * minutes + m] = normal(g) * (1.0 + x * x);
      }
    issues.push_back({"I" + std::to_string(i), testsup::series_on(cal, std::move(v))});
  }
  MarketModeOptions opt;  // deseasonalize on
  const MarketMode mode = compute_market_mode(issues, opt);
  CHECK(mode.deseasonalized);
  const IntradayProfile prof = intraday_profile(mode.series, 3000);
  double lo = 1e300, hi = 0.0;
  for (std::size_t g = 0; g < prof.group_count(); ++g) {
    lo = std::min(lo, prof.group_stddev(g));
    hi = std::max(hi, prof.group_stddev(g));
  }
  CHECK(hi / lo < 1.08);
}

TEST_CASE("issues must share the calendar") {
  const Series a = testsup::series_on(testsup::synthetic_calendar(2, 30),
                                      testsup::gaussian(60, 71));
  const Series b = testsup::series_on(testsup::synthetic_calendar(2, 30),
                                      testsup::gaussian(60, 73));
  CHECK_THROWS_AS(compute_market_mode({{"A", a}, {"B", b}}, raw_options()), Error);
}

}  // TEST_SUITE
