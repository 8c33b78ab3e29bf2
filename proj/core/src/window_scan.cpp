#include "mrwlab/window_scan.hpp"

#include <cmath>

#include "mrwlab/error.hpp"
#include "mrwlab/preprocess.hpp"
#include "segments.hpp"

namespace mrwlab {

namespace {
constexpr const char* kModule = "window_scan";

Series slice(const Series& x, std::size_t from, std::size_t to) {
  Series out;
  out.values.assign(x.values.begin() + static_cast<std::ptrdiff_t>(from),
                    x.values.begin() + static_cast<std::ptrdiff_t>(to));
  out.mask.assign(x.mask.begin() + static_cast<std::ptrdiff_t>(from),
                  x.mask.begin() + static_cast<std::ptrdiff_t>(to));
  out.delta_t = x.delta_t;
  return out;
}

// Coarse sums over [from, to) of x, blocks restarting at session
// boundaries and at masked gaps.
Series aggregate_range(const Series& x, std::size_t from, std::size_t to, int scale) {
  Series out;
  out.delta_t = x.delta_t * scale;
  const auto block = static_cast<std::size_t>(scale);
  for (auto [begin, end] : detail::session_segments(x, from, to)) {
    std::size_t i = begin;
    while (i < end) {
      if (!x.valid(i)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < end && x.valid(j)) ++j;  // maximal unmasked run [i, j)
      for (std::size_t b = i; b + block <= j; b += block) {
        double sum = 0.0;
        for (std::size_t t = b; t < b + block; ++t) sum += x.values[t];
        out.values.push_back(sum);
      }
      i = j;
    }
  }
  out.mask.assign(out.values.size(), 1);
  return out;
}

}  // namespace

Series aggregate_returns(const Series& x, int delta_t) {
  if (delta_t < 1) throw Error(kModule, "aggregation scale must be >= 1");
  if (delta_t == 1) return x;
  return aggregate_range(x, 0, x.size(), delta_t);
}

std::string WindowEstimate::flag() const {
  std::string f = unfit ? "unfit" : (fit.degenerate ? "degenerate" : "ok");
  if (length_exceeds_window) f += ",L>window";
  return f;
}

std::vector<WindowEstimate> window_scan(const Series& x, const WindowScanConfig& cfg) {
  if (cfg.stride == 0) throw Error(kModule, "stride must be positive");
  if (cfg.delta_t < 1) throw Error(kModule, "delta_t must be >= 1");
  if (cfg.window < static_cast<std::size_t>(100) * static_cast<std::size_t>(cfg.delta_t))
    throw Error(kModule, "window shorter than 100 * delta_t is unestimable");
  if (cfg.window > x.size()) throw Error(kModule, "window exceeds series length");
  if (cfg.detrend == DetrendMode::local_block && cfg.detrend_block < 2)
    throw Error(kModule, "detrend block must be >= 2");

  std::vector<WindowEstimate> scan;
  for (std::size_t end = cfg.window; end <= x.size(); end += cfg.stride) {
    WindowEstimate est;
    est.end = end;
    est.detrend = cfg.detrend;
    est.delta_t = cfg.delta_t * x.delta_t;

    const std::size_t from = end - cfg.window;
    Series w;
    if (cfg.delta_t == 1) {
      w = slice(x, from, end);
      if (cfg.detrend == DetrendMode::local_block) {
        // Blocks restart at the original session boundaries.
        for (auto [b, e] : detail::session_segments(x, from, end))
          detail::detrend_segment(w.values, w.mask, b - from, e - from,
                                  static_cast<std::size_t>(cfg.detrend_block));
      }
    } else {
      w = aggregate_range(x, from, end, cfg.delta_t);
      if (cfg.detrend == DetrendMode::local_block)
        w = detrend_local(w, cfg.detrend_block);
    }

    int max_lag = cfg.max_lag;
    if (max_lag <= 0)
      max_lag = static_cast<int>(cfg.window / (10 * static_cast<std::size_t>(cfg.delta_t)));

    try {
      const CovCurve curve = log_abs_cov(w, max_lag);
      est.fit = fit_lambda_L(curve, cfg.k_min);
      est.fit.delta_t = est.delta_t;
      if (est.fit.decorr_length)
        est.length_exceeds_window =
            *est.fit.decorr_length > static_cast<double>(cfg.window) * x.delta_t;
    } catch (const Error&) {
      est.unfit = true;  // emit a flagged entry, never a gap
      est.fit = MrwFit{};
      est.fit.degenerate = true;
      est.fit.delta_t = est.delta_t;
    }
    scan.push_back(std::move(est));
  }
  return scan;
}

std::vector<DailyCount> daily_large_count(const Series& x, double threshold_multiple) {
  if (!(threshold_multiple > 0.0)) throw Error(kModule, "threshold multiple must be > 0");
  const double thr = threshold_multiple * masked_stddev(x);
  std::vector<DailyCount> days;
  for (std::size_t s = 0; s < x.session_count(); ++s) {
    DailyCount d;
    d.date = x.calendar ? x.calendar->session(s).date : static_cast<Date>(s);
    const auto [begin, end] = x.session_range(s);
    for (std::size_t i = begin; i < end; ++i)
      if (x.valid(i) && std::fabs(x.values[i]) > thr) ++d.count;
    days.push_back(d);
  }
  return days;
}

}  // namespace mrwlab
