#ifndef MRWLAB_WINDOW_SCAN_HPP
#define MRWLAB_WINDOW_SCAN_HPP

#include <cstdint>
#include <vector>

#include "mrwlab/estimate.hpp"
#include "mrwlab/series.hpp"

namespace mrwlab {

enum class DetrendMode { none, local_block };

struct WindowScanConfig {
  std::size_t window = 0;  // width in input positions (minutes at delta_t=1)
  std::size_t stride = 0;
  int delta_t = 1;         // coarse return scale in minutes; 1 = as-is
  DetrendMode detrend = DetrendMode::none;
  int detrend_block = 8;   // samples of the working (coarse) series
  int k_min = 20;
  int max_lag = 0;         // 0 -> window / (10 * delta_t)
};

/// One sliding-window estimate. `flag()` folds the diagnostics into the
/// CSV token: "ok", "degenerate" (slope clamped), "unfit" (too few usable
/// lags in this window), with ",L>window" appended when the fitted
/// decorrelation length exceeds the window width.
struct WindowEstimate {
  std::size_t end = 0;  // one past the last input position of the window
  MrwFit fit;
  DetrendMode detrend = DetrendMode::none;
  int delta_t = 1;
  bool unfit = false;
  bool length_exceeds_window = false;

  std::string flag() const;
};

/// Temporal trajectory of the collective-behavior indicator: per window,
/// optionally aggregate to delta_t-minute returns (sums within sessions),
/// optionally remove per-block local trends, then run the covariance fit.
/// Fit failures become flagged degenerate entries, never gaps.
std::vector<WindowEstimate> window_scan(const Series& x, const WindowScanConfig& cfg);

struct DailyCount {
  Date date = 0;          // session date; synthetic index when no calendar
  std::int64_t count = 0;
};

/// Per trading day, the number of unmasked |x| above threshold_multiple
/// times the whole-period standard deviation.
std::vector<DailyCount> daily_large_count(const Series& x, double threshold_multiple);

/// Non-overlapping sums of `delta_t` consecutive unmasked values within
/// sessions (the coarse-return construction shared by moment_scaling and
/// window_scan). The result lives on a plain index grid.
Series aggregate_returns(const Series& x, int delta_t);

}  // namespace mrwlab

#endif  // MRWLAB_WINDOW_SCAN_HPP
