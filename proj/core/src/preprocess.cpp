#include "mrwlab/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mrwlab/error.hpp"
#include "segments.hpp"

namespace mrwlab {

namespace {
constexpr const char* kModule = "timeseries_core";
}

Series log_returns(const PriceSeries& p, int delta_t) {
  if (delta_t < 1) throw Error(kModule, "delta_t must be >= 1");
  if (!p.calendar) throw Error(kModule, "price series has no calendar");
  const auto& cal = *p.calendar;
  Series r;
  r.calendar = p.calendar;
  r.values.assign(p.size(), 0.0);
  r.mask.assign(p.size(), 0);
  r.delta_t = 1;  // grid spacing stays one calendar minute

  std::size_t n_valid = 0;
  for (std::size_t s = 0; s < cal.session_count(); ++s) {
    const std::size_t begin = cal.session_begin(s);
    const std::size_t end = cal.session_end(s);
    const std::size_t skip = static_cast<std::size_t>(cal.session(s).open_skip);
    const std::size_t usable = begin + skip;  // first usable position
    for (std::size_t t = usable + static_cast<std::size_t>(delta_t); t < end; ++t) {
      const std::size_t t0 = t - static_cast<std::size_t>(delta_t);
      if (!p.mask[t] || !p.mask[t0]) continue;
      r.values[t] = std::log(p.prices[t]) - std::log(p.prices[t0]);
      r.mask[t] = 1;
      ++n_valid;
    }
  }
  if (n_valid == 0)
    throw Error(kModule, "no computable returns at delta_t=" + std::to_string(delta_t));
  return r;
}

IntradayProfile intraday_profile(const Series& x, int min_samples) {
  if (!x.calendar) throw Error(kModule, "intraday profile needs a calendar");
  if (x.calendar->session_count() < 2)
    throw Error(kModule, "intraday profile needs more than one session");
  if (min_samples < 2) throw Error(kModule, "min_samples must be >= 2");

  // Per minute-of-day accumulation over the whole series.
  std::map<int, std::pair<std::int64_t, std::pair<double, double>>> buckets;  // mod -> (n, (sum, sumsq))
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.valid(i)) continue;
    auto& b = buckets[x.calendar->minute_of_day_at(i)];
    b.first += 1;
    b.second.first += x.values[i];
    b.second.second += x.values[i] * x.values[i];
  }
  std::int64_t total = 0;
  for (const auto& [mod, b] : buckets) total += b.first;
  if (total < min_samples) throw Error(kModule, "too few samples for an intraday profile");

  // Pool sparse buckets with the earlier neighbor (ascending walk); a
  // sparse leading bucket pools forward into the next one instead.
  struct Group {
    int first_mod, last_mod;
    std::int64_t n = 0;
    double sum = 0.0, sumsq = 0.0;
  };
  std::vector<Group> groups;
  for (const auto& [mod, b] : buckets) {
    const bool merge = !groups.empty() &&
                       (groups.back().n < min_samples || b.first < min_samples);
    if (merge) {
      auto& g = groups.back();
      g.last_mod = mod;
      g.n += b.first;
      g.sum += b.second.first;
      g.sumsq += b.second.second;
    } else {
      groups.push_back({mod, mod, b.first, b.second.first, b.second.second});
    }
  }
  if (groups.size() > 1 && groups.back().n < min_samples) {
    auto& prev = groups[groups.size() - 2];
    prev.last_mod = groups.back().last_mod;
    prev.n += groups.back().n;
    prev.sum += groups.back().sum;
    prev.sumsq += groups.back().sumsq;
    groups.pop_back();
  }

  IntradayProfile prof;
  prof.group_of_.assign(1440, -1);
  int gi = 0;
  int prev_last = -1;
  for (const auto& g : groups) {
    const double n = static_cast<double>(g.n);
    const double var = (g.sumsq - g.sum * g.sum / n) / (n - 1.0);
    const double sd = std::sqrt(std::max(var, 0.0));
    if (!(sd > 0.0))
      throw Error(kModule, "degenerate (zero-dispersion) intraday bucket at minute " +
                               std::to_string(g.first_mod));
    prof.stddev_.push_back(sd);
    prof.count_.push_back(g.n);
    // Cover the group's full minute span, including observed minutes that
    // were pooled into it.
    for (int mod = std::max(g.first_mod, prev_last + 1); mod <= g.last_mod; ++mod)
      if (buckets.count(mod)) prof.group_of_[mod] = gi;
    prev_last = g.last_mod;
    ++gi;
  }
  return prof;
}

bool IntradayProfile::covers(int minute_of_day) const {
  return minute_of_day >= 0 && minute_of_day < 1440 && group_of_[minute_of_day] >= 0;
}

double IntradayProfile::at(int minute_of_day) const {
  if (!covers(minute_of_day))
    throw Error(kModule, "intraday profile does not cover minute " +
                             std::to_string(minute_of_day));
  return stddev_[static_cast<std::size_t>(group_of_[minute_of_day])];
}

Series deseasonalize(const Series& x, const IntradayProfile& prof) {
  if (!x.calendar) throw Error(kModule, "deseasonalize needs a calendar");
  Series out = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.valid(i)) continue;
    out.values[i] = x.values[i] / prof.at(x.calendar->minute_of_day_at(i));
  }
  return out;
}

Series detrend_local(const Series& x, int block) {
  if (block < 2) throw Error(kModule, "detrend block must be >= 2");
  Series out = x;
  const std::size_t b = static_cast<std::size_t>(block);
  for (auto [begin, end] : detail::session_segments(x, 0, x.size()))
    detail::detrend_segment(out.values, out.mask, begin, end, b);
  return out;
}

}  // namespace mrwlab
