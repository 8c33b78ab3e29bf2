#include "mrwlab/market_mode.hpp"

#include <algorithm>
#include <cmath>

#include "mrwlab/error.hpp"

namespace mrwlab {

namespace {
constexpr const char* kModule = "market_mode";
}

MarketMode compute_market_mode(const std::vector<NamedSeries>& returns,
                               const MarketModeOptions& opt) {
  if (returns.empty()) throw Error(kModule, "no input series");
  if (opt.coverage <= 0.0 || opt.coverage > 1.0)
    throw Error(kModule, "coverage must be in (0, 1]");

  std::vector<const NamedSeries*> ordered;
  ordered.reserve(returns.size());
  for (const auto& r : returns) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const NamedSeries* a, const NamedSeries* b) { return a->name < b->name; });

  const Series& first = ordered.front()->series;
  const std::size_t n = first.size();
  for (const auto* r : ordered) {
    if (r->series.size() != n || r->series.calendar != first.calendar)
      throw Error(kModule, "issue '" + r->name + "' is not on the shared calendar");
  }

  MarketMode mode;
  mode.n_issues = ordered.size();
  for (const auto* r : ordered) {
    mode.issues.push_back(r->name);
    double sigma = 0.0;
    try {
      sigma = masked_stddev(r->series);
    } catch (const Error&) {
      throw Error(kModule, "issue '" + r->name + "' has fewer than 2 valid returns");
    }
    if (!(sigma > 0.0))
      throw Error(kModule, "issue '" + r->name + "' has zero return variance");
    mode.sigma.push_back(sigma);
  }

  Series avg;
  avg.calendar = first.calendar;
  avg.values.assign(n, 0.0);
  avg.mask.assign(n, 0);
  avg.delta_t = first.delta_t;
  const double need = opt.coverage * static_cast<double>(ordered.size());
  for (std::size_t t = 0; t < n; ++t) {
    double sum = 0.0;
    std::size_t present = 0;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const Series& s = ordered[i]->series;
      if (!s.valid(t)) continue;
      sum += s.values[t] / mode.sigma[i];
      ++present;
    }
    if (present == 0 || static_cast<double>(present) + 1e-9 < need) continue;
    avg.values[t] = sum / static_cast<double>(present);
    avg.mask[t] = 1;
  }

  if (opt.deseasonalize) {
    const IntradayProfile prof = intraday_profile(avg, opt.profile_min_samples);
    mode.series = deseasonalize(avg, prof);
    mode.deseasonalized = true;
  } else {
    mode.series = std::move(avg);
  }
  return mode;
}

}  // namespace mrwlab
