#include "mrwlab/series.hpp"

#include <cmath>

#include "mrwlab/error.hpp"

namespace mrwlab {

Series Series::unmasked(std::vector<double> v, int delta_t) {
  Series s;
  s.mask.assign(v.size(), 1);
  s.values = std::move(v);
  s.delta_t = delta_t;
  return s;
}

Series Series::on_calendar(CalendarPtr cal, std::vector<double> v,
                           std::vector<std::uint8_t> m) {
  if (!cal || v.size() != cal->size() || m.size() != cal->size())
    throw Error("timeseries_core", "series length does not match calendar");
  Series s;
  s.calendar = std::move(cal);
  s.values = std::move(v);
  s.mask = std::move(m);
  return s;
}

std::size_t valid_count(const Series& x) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) n += x.mask[i] != 0;
  return n;
}

double masked_mean(const Series& x) {
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.valid(i)) {
      s += x.values[i];
      ++n;
    }
  if (n == 0) throw Error("timeseries_core", "mean of an all-masked series");
  return s / static_cast<double>(n);
}

double masked_variance(const Series& x) {
  const double mu = masked_mean(x);
  double ss = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.valid(i)) {
      const double d = x.values[i] - mu;
      ss += d * d;
      ++n;
    }
  if (n < 2) throw Error("timeseries_core", "variance needs at least 2 valid values");
  return ss / static_cast<double>(n - 1);
}

double masked_stddev(const Series& x) { return std::sqrt(masked_variance(x)); }

}  // namespace mrwlab
