#include "mrwlab/calendar.hpp"

#include <algorithm>
#include <cstdio>

#include "mrwlab/error.hpp"

namespace mrwlab {

namespace {

// Days since 1970-01-01 from a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yr + (m <= 2));
}

[[noreturn]] void bad_time(std::string_view s) {
  throw Error("timeseries_core", "unparsable timestamp '" + std::string(s) + "'");
}

}  // namespace

Date parse_iso_date(std::string_view s) {
  int y = 0, m = 0, d = 0;
  if (std::sscanf(std::string(s).c_str(), "%d-%d-%d", &y, &m, &d) != 3 ||
      m < 1 || m > 12 || d < 1 || d > 31)
    bad_time(s);
  return static_cast<Date>(days_from_civil(y, m, d));
}

Minute parse_iso_minute(std::string_view s) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  const int got = std::sscanf(std::string(s).c_str(), "%d-%d-%dT%d:%d:%d",
                              &y, &mo, &d, &h, &mi, &sec);
  if (got < 5 || mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 ||
      mi < 0 || mi > 59)
    bad_time(s);
  return days_from_civil(y, mo, d) * 1440 + h * 60 + mi;
}

std::string format_iso_date(Date d) {
  int y, m, day;
  civil_from_days(d, y, m, day);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, day);
  return buf;
}

std::string format_iso_minute(Minute m) {
  const Date day = date_of_minute(m);
  const int mod = minute_of_day(m);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d", format_iso_date(day).c_str(),
                mod / 60, mod % 60);
  return buf;
}

Date date_of_minute(Minute m) {
  Minute d = m / 1440;
  if (m < 0 && m % 1440 != 0) --d;
  return static_cast<Date>(d);
}

int minute_of_day(Minute m) {
  return static_cast<int>(m - static_cast<Minute>(date_of_minute(m)) * 1440);
}

int weekday(Date d) {
  // 1970-01-01 was a Thursday (ISO weekday 3, Monday = 0).
  const std::int64_t w = (static_cast<std::int64_t>(d) + 3) % 7;
  return static_cast<int>(w < 0 ? w + 7 : w);
}

TradingCalendar TradingCalendar::from_sessions(std::vector<Session> sessions) {
  TradingCalendar cal;
  Date prev_date = 0;
  bool first = true;
  cal.offsets_.push_back(0);
  for (auto& s : sessions) {
    if (s.minutes.empty())
      throw Error("timeseries_core", "empty session " + format_iso_date(s.date));
    if (!first && s.date <= prev_date)
      throw Error("timeseries_core", "sessions out of order at " + format_iso_date(s.date));
    prev_date = s.date;
    first = false;
    Minute prev = -1;
    for (Minute m : s.minutes) {
      if (date_of_minute(m) != s.date)
        throw Error("timeseries_core", "minute " + format_iso_minute(m) +
                                           " outside session date " + format_iso_date(s.date));
      if (m <= prev && prev >= 0)
        throw Error("timeseries_core", "non-increasing minutes in session " + format_iso_date(s.date));
      prev = m;
    }
    if (s.open_skip < 0 || static_cast<std::size_t>(s.open_skip) >= s.minutes.size())
      throw Error("timeseries_core", "open skip out of range in session " + format_iso_date(s.date));
    cal.total_ += s.minutes.size();
    cal.offsets_.push_back(cal.total_);
    cal.sessions_.push_back(std::move(s));
  }
  return cal;
}

TradingCalendar TradingCalendar::synthetic(std::size_t n_sessions,
                                           std::size_t minutes_per_session,
                                           Date start_date, int open_minute) {
  if (minutes_per_session == 0 || open_minute + minutes_per_session > 1440)
    throw Error("timeseries_core", "synthetic session does not fit in a day");
  std::vector<Session> sess(n_sessions);
  for (std::size_t s = 0; s < n_sessions; ++s) {
    sess[s].date = start_date + static_cast<Date>(s);
    sess[s].minutes.resize(minutes_per_session);
    const Minute open = static_cast<Minute>(sess[s].date) * 1440 + open_minute;
    for (std::size_t i = 0; i < minutes_per_session; ++i)
      sess[s].minutes[i] = open + static_cast<Minute>(i);
  }
  return from_sessions(std::move(sess));
}

std::size_t TradingCalendar::session_of(std::size_t pos) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), pos);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

Minute TradingCalendar::minute_at(std::size_t pos) const {
  const std::size_t s = session_of(pos);
  return sessions_[s].minutes[pos - offsets_[s]];
}

bool TradingCalendar::in_open_skip(std::size_t pos) const {
  const std::size_t s = session_of(pos);
  return pos - offsets_[s] < static_cast<std::size_t>(sessions_[s].open_skip);
}

std::size_t TradingCalendar::position_of(Minute m) const {
  const Date d = date_of_minute(m);
  // Sessions are date-ordered; locate the session, then the minute in it.
  std::size_t lo = 0, hi = sessions_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (sessions_[mid].date < d)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == sessions_.size() || sessions_[lo].date != d) return npos;
  const auto& mins = sessions_[lo].minutes;
  const auto it = std::lower_bound(mins.begin(), mins.end(), m);
  if (it == mins.end() || *it != m) return npos;
  return offsets_[lo] + static_cast<std::size_t>(it - mins.begin());
}

}  // namespace mrwlab
