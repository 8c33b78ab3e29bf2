#ifndef MRWLAB_MARKET_MODE_HPP
#define MRWLAB_MARKET_MODE_HPP

#include <string>
#include <vector>

#include "mrwlab/preprocess.hpp"
#include "mrwlab/series.hpp"

namespace mrwlab {

struct NamedSeries {
  std::string name;
  Series series;
};

struct MarketModeOptions {
  /// Minimum fraction of issues that must be valid at t; below it the
  /// market-mode value is masked. Default: every issue present.
  double coverage = 1.0;
  bool deseasonalize = true;
  int profile_min_samples = 30;
};

/// Equal-weight average of volatility-normalized returns, the first-PC
/// proxy for the cross-section.
struct MarketMode {
  Series series;
  std::size_t n_issues = 0;
  std::vector<std::string> issues;  // sorted by name
  std::vector<double> sigma;        // whole-period std per issue, same order
  bool deseasonalized = false;
};

/// All inputs must share one calendar grid. Issues are normalized by their
/// whole-period sample standard deviation and averaged in name order so the
/// reduction is bit-stable.
MarketMode compute_market_mode(const std::vector<NamedSeries>& returns,
                               const MarketModeOptions& opt = {});

}  // namespace mrwlab

#endif  // MRWLAB_MARKET_MODE_HPP
