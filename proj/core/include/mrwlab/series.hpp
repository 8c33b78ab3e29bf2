#ifndef MRWLAB_SERIES_HPP
#define MRWLAB_SERIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrwlab/calendar.hpp"

namespace mrwlab {

/// A real-valued series on a trading-minute grid with a validity mask.
/// `calendar == nullptr` means a plain index grid (one implicit session),
/// the form produced by the synthetic generators. `delta_t` is the spacing
/// between consecutive positions in minutes.
struct Series {
  CalendarPtr calendar;  // may be null
  std::vector<double> values;
  std::vector<std::uint8_t> mask;  // 1 = valid
  int delta_t = 1;

  std::size_t size() const { return values.size(); }
  bool valid(std::size_t i) const { return mask[i] != 0; }

  std::size_t session_count() const {
    return calendar ? calendar->session_count() : (values.empty() ? 0 : 1);
  }
  /// [begin, end) positions of session s.
  std::pair<std::size_t, std::size_t> session_range(std::size_t s) const {
    if (calendar) return {calendar->session_begin(s), calendar->session_end(s)};
    return {0, values.size()};
  }

  static Series unmasked(std::vector<double> v, int delta_t = 1);
  static Series on_calendar(CalendarPtr cal, std::vector<double> v,
                            std::vector<std::uint8_t> m);
};

/// Per-issue minute prices aligned 1:1 with the calendar grid.
struct PriceSeries {
  std::string issue;
  CalendarPtr calendar;
  std::vector<double> prices;      // > 0 where mask set
  std::vector<std::uint8_t> mask;  // 1 = observed

  std::size_t size() const { return prices.size(); }
};

std::size_t valid_count(const Series& x);
double masked_mean(const Series& x);
/// Sample variance (n-1 denominator) over unmasked values.
double masked_variance(const Series& x);
double masked_stddev(const Series& x);

}  // namespace mrwlab

#endif  // MRWLAB_SERIES_HPP
