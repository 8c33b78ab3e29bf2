#include "mrwlab/events.hpp"

#include <algorithm>
#include <cmath>

#include "mrwlab/error.hpp"
#include "mrwlab/linfit.hpp"

namespace mrwlab {

namespace {
constexpr const char* kModule = "event_analysis";
constexpr std::int64_t kMinSideEvents = 20;
}

std::size_t find_main_shock(const Series& x, std::size_t from, std::size_t to) {
  if (from >= to || to > x.size()) throw Error(kModule, "empty search range");
  std::size_t best = TradingCalendar::npos;
  double best_amp = -1.0;
  for (std::size_t i = from; i < to; ++i) {
    if (!x.valid(i)) continue;
    const double a = std::fabs(x.values[i]);
    if (a > best_amp) {  // ties break to the earliest
      best_amp = a;
      best = i;
    }
  }
  if (best == TradingCalendar::npos)
    throw Error(kModule, "search range is entirely masked");
  return best;
}

ShockFrame cumulative_frequency(const Series& x, std::size_t origin,
                                double threshold_multiple) {
  if (origin >= x.size()) throw Error(kModule, "origin outside the series");
  if (!(threshold_multiple > 0.0)) throw Error(kModule, "threshold multiple must be > 0");

  ShockFrame frame;
  frame.origin = origin;
  frame.sigma_ref = masked_stddev(x);
  frame.threshold_multiple = threshold_multiple;
  frame.threshold_abs = threshold_multiple * frame.sigma_ref;

  // Trading-time axis: position differences, overnight gaps already absent
  // from the grid.
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == origin || !x.valid(i)) continue;
    if (std::fabs(x.values[i]) < frame.threshold_abs) continue;
    const double t = (static_cast<double>(i) - static_cast<double>(origin)) * x.delta_t;
    if (t < 0.0)
      frame.before.push_back(t);
    else
      frame.after.push_back(t);
  }
  return frame;
}

ShockFrame frame_from_event_times(std::span<const double> signed_minutes) {
  ShockFrame frame;
  for (const double t : signed_minutes) {
    if (t < 0.0)
      frame.before.push_back(t);
    else if (t > 0.0)
      frame.after.push_back(t);
  }
  std::sort(frame.before.begin(), frame.before.end());
  std::sort(frame.after.begin(), frame.after.end());
  return frame;
}

namespace {

// OLS of ln(count) on ln|t| over the event times; N at the j-th closest
// event is j by construction.
std::optional<OmoriSideFit> fit_side(std::vector<double> abs_t) {
  if (static_cast<std::int64_t>(abs_t.size()) < kMinSideEvents) return std::nullopt;
  std::sort(abs_t.begin(), abs_t.end());
  std::vector<double> lx, ly;
  lx.reserve(abs_t.size());
  ly.reserve(abs_t.size());
  for (std::size_t j = 0; j < abs_t.size(); ++j) {
    if (abs_t[j] <= 0.0) continue;  // t = 0 excluded
    lx.push_back(std::log(abs_t[j]));
    ly.push_back(std::log(static_cast<double>(j + 1)));
  }
  if (static_cast<std::int64_t>(lx.size()) < kMinSideEvents) return std::nullopt;
  const LinearFit f = ols(lx, ly);
  OmoriSideFit side;
  side.beta = f.slope;
  side.se = f.slope_se;
  side.r2 = f.r2;
  side.n_events = static_cast<std::int64_t>(lx.size());
  side.t_min = std::exp(lx.front());
  side.t_max = std::exp(lx.back());
  return side;
}

}  // namespace

OmoriFit fit_omori(const ShockFrame& frame) {
  OmoriFit fit;
  std::vector<double> before_abs(frame.before.size());
  for (std::size_t i = 0; i < frame.before.size(); ++i)
    before_abs[i] = -frame.before[i];
  fit.before = fit_side(std::move(before_abs));
  fit.after = fit_side(std::vector<double>(frame.after.begin(), frame.after.end()));
  fit.ordered_ok = fit.before && fit.after && fit.before->beta > 0.0 &&
                   fit.before->beta < fit.after->beta && fit.after->beta < 1.0;
  return fit;
}

}  // namespace mrwlab
