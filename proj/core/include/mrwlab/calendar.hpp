#ifndef MRWLAB_CALENDAR_HPP
#define MRWLAB_CALENDAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mrwlab {

/// Minutes since the Unix epoch, UTC.
using Minute = std::int64_t;
/// Days since the Unix epoch, UTC.
using Date = std::int32_t;

Minute parse_iso_minute(std::string_view s);  // "2008-10-08T14:31[:ss][Z]"
Date parse_iso_date(std::string_view s);      // "2008-10-08"
std::string format_iso_minute(Minute m);
std::string format_iso_date(Date d);

Date date_of_minute(Minute m);
int minute_of_day(Minute m);  // 0..1439
/// ISO weekday, 0 = Monday .. 6 = Sunday.
int weekday(Date d);

/// One trading day: the ordered minute grid plus the number of minutes
/// after the open that are excluded from return statistics.
struct Session {
  Date date = 0;
  std::vector<Minute> minutes;  // strictly increasing, all on `date`
  int open_skip = 0;            // leading minutes excluded from returns
};

/// Shared minute grid for every per-issue series: an ordered list of
/// non-overlapping sessions, addressable by a flat position index.
class TradingCalendar {
 public:
  static TradingCalendar from_sessions(std::vector<Session> sessions);

  /// Regular grid for synthetic data: `n_sessions` days of
  /// `minutes_per_session` consecutive minutes starting at `open_minute`
  /// past midnight of `start_date`. Weekends are not skipped.
  static TradingCalendar synthetic(std::size_t n_sessions,
                                   std::size_t minutes_per_session,
                                   Date start_date = parse_iso_date("2008-01-07"),
                                   int open_minute = 8 * 60);

  std::size_t size() const { return total_; }
  std::size_t session_count() const { return sessions_.size(); }
  const Session& session(std::size_t s) const { return sessions_[s]; }

  std::size_t session_begin(std::size_t s) const { return offsets_[s]; }
  std::size_t session_end(std::size_t s) const { return offsets_[s + 1]; }
  std::size_t session_of(std::size_t pos) const;

  Minute minute_at(std::size_t pos) const;
  int minute_of_day_at(std::size_t pos) const { return minute_of_day(minute_at(pos)); }
  Date date_at(std::size_t pos) const { return sessions_[session_of(pos)].date; }

  /// True when `pos` lies in its session's excluded opening stretch.
  bool in_open_skip(std::size_t pos) const;

  /// Flat position of a minute, or npos when absent.
  std::size_t position_of(Minute m) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Session> sessions_;
  std::vector<std::size_t> offsets_;  // size session_count()+1
  std::size_t total_ = 0;
};

using CalendarPtr = std::shared_ptr<const TradingCalendar>;

}  // namespace mrwlab

#endif  // MRWLAB_CALENDAR_HPP
