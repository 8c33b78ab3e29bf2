#ifndef MRWLAB_EVENTS_HPP
#define MRWLAB_EVENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrwlab/series.hpp"

namespace mrwlab {

/// Threshold exceedances around a main shock, on the trading-time axis
/// (overnight gaps compressed out by construction of the position grid).
/// Times are signed minutes from the origin; the origin itself is not an
/// event on either side.
struct ShockFrame {
  std::size_t origin = 0;          // position of the main shock
  double sigma_ref = 0.0;          // reference-period std of the series
  double threshold_multiple = 0.0;
  double threshold_abs = 0.0;
  std::vector<double> before;  // negative, ascending (chronological)
  std::vector<double> after;   // positive, ascending
};

/// Position of the largest |x| over unmasked entries of [from, to);
/// ties break to the earliest.
std::size_t find_main_shock(const Series& x, std::size_t from, std::size_t to);

/// Events are unmasked positions with |x| >= threshold_multiple * sigma,
/// sigma taken over the whole series.
ShockFrame cumulative_frequency(const Series& x, std::size_t origin,
                                double threshold_multiple);

/// Frame built from raw signed event times (the simulator's output form);
/// an exact zero is treated as the main shock and dropped from the sides.
ShockFrame frame_from_event_times(std::span<const double> signed_minutes);

struct OmoriSideFit {
  double beta = 0.0;
  double se = 0.0;
  double r2 = 0.0;
  std::int64_t n_events = 0;
  double t_min = 0.0;  // |t| range of the fit
  double t_max = 0.0;
};

/// Power-law exponents of the cumulative exceedance count on each side.
/// A side with fewer than 20 events is absent. ordered_ok reports whether
/// 0 < beta_before < beta_after < 1 holds (false when a side is absent).
struct OmoriFit {
  std::optional<OmoriSideFit> before;
  std::optional<OmoriSideFit> after;
  bool ordered_ok = false;
};

/// Per side, OLS of ln(cumulative count at each event) on ln|t| over the
/// event times themselves; no binning grid is introduced.
OmoriFit fit_omori(const ShockFrame& frame);

}  // namespace mrwlab

#endif  // MRWLAB_EVENTS_HPP
