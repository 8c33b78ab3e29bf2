#ifndef MRWLAB_PREPROCESS_HPP
#define MRWLAB_PREPROCESS_HPP

#include <cstdint>
#include <vector>

#include "mrwlab/series.hpp"

namespace mrwlab {

/// Typical dispersion per time of day, estimated over the whole series.
/// Sparse minute-of-day buckets are pooled with their earlier neighbor
/// until every group holds at least `min_samples` observations.
class IntradayProfile {
 public:
  bool covers(int minute_of_day) const;
  double at(int minute_of_day) const;  // throws when not covered

  std::size_t group_count() const { return stddev_.size(); }
  double group_stddev(std::size_t g) const { return stddev_[g]; }
  std::int64_t group_size(std::size_t g) const { return count_[g]; }

 private:
  friend IntradayProfile intraday_profile(const Series&, int);
  std::vector<int> group_of_;  // minute-of-day -> group, -1 = absent
  std::vector<double> stddev_;
  std::vector<std::int64_t> count_;
};

/// Log-return at horizon `delta_t` minutes on the calendar grid. A position
/// is valid only when both endpoints are observed, lie in the same session
/// and clear the session's opening skip; overnight differences never occur.
Series log_returns(const PriceSeries& p, int delta_t);

/// Sample standard deviation per minute-of-day bucket over all sessions.
IntradayProfile intraday_profile(const Series& x, int min_samples = 30);

/// Divide each value by the profile dispersion of its minute of day.
Series deseasonalize(const Series& x, const IntradayProfile& prof);

/// Subtract the per-block least-squares linear trend. Blocks of `block`
/// positions tile each session; a trailing partial block of length >= 2
/// gets its own fit; a session (or tail) shorter than one block is left
/// unchanged. Masked positions do not enter the fits.
Series detrend_local(const Series& x, int block);

}  // namespace mrwlab

#endif  // MRWLAB_PREPROCESS_HPP
