#ifndef MRWLAB_NEWS_HPP
#define MRWLAB_NEWS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mrwlab/calendar.hpp"

namespace mrwlab {

/// Daily news counts with the day-of-week adjustment: each day is divided
/// by its weekday mean and multiplied by the period mean, which preserves
/// the period total. `cumulative` accumulates the adjusted counts.
struct NewsSeries {
  std::vector<Date> date;  // ascending
  std::vector<double> raw;
  std::vector<double> adjusted;
  std::vector<double> cumulative;

  std::size_t size() const { return date.size(); }
};

/// Recomputes `adjusted` and `cumulative` from `raw`. Idempotent: weekday
/// means of the adjusted series all equal the period mean.
NewsSeries deseasonalize_news(const NewsSeries& raw);

struct DatedValue {
  Date date = 0;
  double value = 0.0;
};

/// Power-law coupling Var(omega)(t) ~ cum_news(t)^alpha over a date window.
struct NewsCoupling {
  double alpha = 0.0;
  double se = 0.0;
  double r2 = 0.0;
  double prefactor = 0.0;
  std::size_t n_points = 0;
  Date from = 0;
  Date to = 0;
  std::vector<DatedValue> joined_var;   // the points that entered the fit
  std::vector<double> joined_cum_news;  // aligned with joined_var
};

/// Joins the variance trajectory with the cumulative adjusted news count on
/// common dates inside [from, to] and fits ln(var) on ln(cum_news).
NewsCoupling fit_news_coupling(std::span<const DatedValue> var_trajectory,
                               const NewsSeries& news, Date from, Date to);

}  // namespace mrwlab

#endif  // MRWLAB_NEWS_HPP
