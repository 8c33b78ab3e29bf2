#include <doctest.h>

#include <cmath>

#include "mrwlab/error.hpp"
#include "mrwlab/events.hpp"
#include "mrwlab/simulate.hpp"
#include "test_support.hpp"

using namespace mrwlab;

TEST_SUITE("events") {

TEST_CASE("find_main_shock: spike, ties, masks") {
  std::vector<double> v(100, 0.1);
  v[40] = -5.0;  // amplitude counts, not sign
  v[60] = 5.0;   // equal amplitude later
  Series x = Series::unmasked(std::move(v));
  CHECK(find_main_shock(x, 0, x.size()) == 40);  // earliest of the tie
  CHECK(find_main_shock(x, 50, x.size()) == 60);

  x.mask[40] = 0;
  CHECK(find_main_shock(x, 0, 50) != 40);
  Series masked = x;
  for (auto& m : masked.mask) m = 0;
  CHECK_THROWS_AS(find_main_shock(masked, 0, masked.size()), Error);
  CHECK_THROWS_AS(find_main_shock(x, 10, 10), Error);
}

TEST_CASE("cumulative_frequency: no exceedances gives an empty frame") {
  const Series x = testsup::gaussian_series(2000, 81);
  const ShockFrame frame = cumulative_frequency(x, 1000, 50.0);
  CHECK(frame.before.empty());
  CHECK(frame.after.empty());
  CHECK(frame.threshold_abs == doctest::Approx(50.0 * masked_stddev(x)));
}

TEST_CASE("cumulative_frequency: threshold nesting and signed trading time") {
  const Series x = testsup::gaussian_series(1 << 14, 83);
  const std::size_t origin = find_main_shock(x, 0, x.size());
  const ShockFrame f2 = cumulative_frequency(x, origin, 2.0);
  const ShockFrame f3 = cumulative_frequency(x, origin, 3.0);
  CHECK(f2.before.size() + f2.after.size() > f3.before.size() + f3.after.size());

  // Nesting: every 3-sigma event is also a 2-sigma event.
  for (const double t : f3.after)
    CHECK(std::find(f2.after.begin(), f2.after.end(), t) != f2.after.end());
  for (const double t : f3.before)
    CHECK(std::find(f2.before.begin(), f2.before.end(), t) != f2.before.end());

  for (const double t : f2.before) CHECK(t < 0.0);
  for (const double t : f2.after) CHECK(t > 0.0);
  CHECK(std::is_sorted(f2.before.begin(), f2.before.end()));
  CHECK(std::is_sorted(f2.after.begin(), f2.after.end()));

  CHECK_THROWS_AS(cumulative_frequency(x, x.size(), 2.0), Error);
}

TEST_CASE("origin event is excluded from both sides") {
  std::vector<double> v(500, 0.01);
  v[250] = 10.0;
  v[100] = 5.0;
  v[400] = 5.0;
  const Series x = Series::unmasked(std::move(v));
  const ShockFrame frame = cumulative_frequency(x, 250, 2.0);
  CHECK(frame.before.size() == 1);
  CHECK(frame.after.size() == 1);
  CHECK(frame.before[0] == doctest::Approx(-150.0));
  CHECK(frame.after[0] == doctest::Approx(150.0));
}

TEST_CASE("fit_omori: exact synthetic curve recovers beta to 1e-6") {
  // N(t) = 3 t^0.5 sampled at its inversion points t_j = (j/3)^2.
  std::vector<double> events;
  events.push_back(0.0);
  for (int j = 1; j <= 200; ++j) {
    const double t = std::pow(j / 3.0, 2.0);
    events.push_back(t);
    events.push_back(-t);
  }
  const ShockFrame frame = frame_from_event_times(events);
  const OmoriFit fit = fit_omori(frame);
  REQUIRE(fit.before.has_value());
  REQUIRE(fit.after.has_value());
  CHECK(fit.after->beta == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fit.before->beta == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fit.after->se == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fit.after->r2 == doctest::Approx(1.0));
  CHECK(fit.after->n_events == 200);
  CHECK(!fit.ordered_ok);  // equal exponents violate the strict ordering
}

TEST_CASE("fit_omori: sides below 20 events are absent") {
  std::vector<double> events{0.0};
  for (int j = 1; j <= 30; ++j) events.push_back(j * 1.5);
  for (int j = 1; j <= 5; ++j) events.push_back(-j * 2.0);
  const OmoriFit fit = fit_omori(frame_from_event_times(events));
  CHECK(fit.after.has_value());
  CHECK(!fit.before.has_value());
  CHECK(!fit.ordered_ok);
}

TEST_CASE("fit_omori: time-unit rescaling leaves beta unchanged") {
  OmoriParams p;
  p.beta_before = 0.4;
  p.beta_after = 0.6;
  p.amp_before = 20.0;
  p.amp_after = 8.0;
  p.horizon = 2000.0;
  const auto events = simulate_omori_events(p, 17);
  const OmoriFit fit = fit_omori(frame_from_event_times(events));
  std::vector<double> scaled(events);
  for (auto& t : scaled) t *= 7.0;
  const OmoriFit fit7 = fit_omori(frame_from_event_times(scaled));
  REQUIRE((fit.after && fit7.after && fit.before && fit7.before));
  CHECK(fit.after->beta == doctest::Approx(fit7.after->beta).epsilon(1e-12));
  CHECK(fit.before->beta == doctest::Approx(fit7.before->beta).epsilon(1e-12));
}

TEST_CASE("round trip: simulator events through a spike series") {
  // Events at integer trading minutes become spikes; the frame must
  // reproduce them exactly and the fit must land near the generators.
  OmoriParams p;
  p.beta_before = 0.3;
  p.beta_after = 0.7;
  p.amp_before = 3.0;  // low rates: minute rounding rarely collides
  p.amp_after = 1.0;
  p.horizon = 3000.0;
  const auto events = simulate_omori_events(p, 19);

  const std::size_t origin = 3000;
  std::vector<double> v(6001, 1e-4);
  std::vector<double> expect_before, expect_after;
  for (const double t : events) {
    const auto pos = static_cast<std::ptrdiff_t>(origin) + std::llround(t);
    const double rounded = std::llround(t);
    if (v[static_cast<std::size_t>(pos)] > 0.5) continue;  // same minute
    v[static_cast<std::size_t>(pos)] = 10.0;
    if (rounded < 0.0) expect_before.push_back(rounded);
    if (rounded > 0.0) expect_after.push_back(rounded);
  }
  std::sort(expect_before.begin(), expect_before.end());
  std::sort(expect_after.begin(), expect_after.end());

  const Series x = Series::unmasked(std::move(v));
  const ShockFrame frame = cumulative_frequency(x, origin, 2.0);
  CHECK(frame.before == expect_before);
  CHECK(frame.after == expect_after);

  const OmoriFit fit = fit_omori(frame);
  REQUIRE((fit.before && fit.after));
  CHECK(fit.before->beta == doctest::Approx(0.3).epsilon(0.35));
  CHECK(fit.after->beta == doctest::Approx(0.7).epsilon(0.15));
  CHECK(fit.ordered_ok);
}

TEST_CASE("N counts step by one and never decrease") {
  const Series x = testsup::gaussian_series(1 << 13, 89);
  const ShockFrame frame =
      cumulative_frequency(x, find_main_shock(x, 0, x.size()), 2.5);
  // By construction N at the j-th closest event is j: check uniqueness
  // and ordering of event times on each side.
  for (std::size_t i = 1; i < frame.after.size(); ++i)
    CHECK(frame.after[i] > frame.after[i - 1]);
  for (std::size_t i = 1; i < frame.before.size(); ++i)
    CHECK(frame.before[i] > frame.before[i - 1]);
}

}  // TEST_SUITE
