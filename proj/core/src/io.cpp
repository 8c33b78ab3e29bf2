#include "mrwlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>

#include "mrwlab/error.hpp"

namespace mrwlab {

namespace {

constexpr const char* kModule = "io";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<double> parse_double(const std::string& s) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(kModule, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' endings everywhere
  if (!out) throw Error(kModule, "cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(kModule, "cannot open '" + path + "'");
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::map<Date, int> load_calendar_skips(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line) || split_csv(line).size() < 2)
    throw Error(kModule, "calendar file '" + path + "' lacks a date,open_skip_minutes header");
  std::map<Date, int> skips;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() < 2) throw Error(kModule, "short row in calendar file: " + line);
    const auto v = parse_double(cols[1]);
    if (!v || *v < 0.0) throw Error(kModule, "bad skip value in calendar file: " + line);
    skips[parse_iso_date(cols[0])] = static_cast<int>(*v);
  }
  return skips;
}

PriceTable load_prices(const std::string& path, const std::map<Date, int>& skip_by_date) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line))
    throw Error(kModule, "'" + path + "' is empty");
  const auto header = split_csv(line);
  int c_ts = -1, c_issue = -1, c_price = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "timestamp") c_ts = static_cast<int>(i);
    if (header[i] == "issue") c_issue = static_cast<int>(i);
    if (header[i] == "price") c_price = static_cast<int>(i);
  }
  if (c_ts < 0 || c_issue < 0 || c_price < 0)
    throw Error(kModule, "'" + path + "' lacks a timestamp,issue,price header");

  struct Obs {
    Minute minute;
    double price;
    bool ok;
  };
  std::map<std::string, std::map<Minute, Obs>> by_issue;
  std::vector<Minute> all_minutes;
  std::vector<std::size_t> duplicate_rows;
  IngestionReport report;

  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() <= static_cast<std::size_t>(std::max({c_ts, c_issue, c_price}))) {
      report.rejected.push_back("row " + std::to_string(row) + ": short row");
      continue;
    }
    ++report.rows_total;
    Minute m;
    try {
      m = parse_iso_minute(cols[static_cast<std::size_t>(c_ts)]);
    } catch (const Error&) {
      report.rejected.push_back("row " + std::to_string(row) + ": bad timestamp '" +
                                cols[static_cast<std::size_t>(c_ts)] + "'");
      continue;
    }
    const std::string& issue = cols[static_cast<std::size_t>(c_issue)];
    if (issue.empty()) {
      report.rejected.push_back("row " + std::to_string(row) + ": empty issue id");
      continue;
    }
    const auto price = parse_double(cols[static_cast<std::size_t>(c_price)]);

    auto& slot = by_issue[issue];
    if (slot.count(m)) {
      duplicate_rows.push_back(row);
      continue;
    }
    all_minutes.push_back(m);
    if (!price) {
      report.rejected.push_back("row " + std::to_string(row) + ": non-numeric price '" +
                                cols[static_cast<std::size_t>(c_price)] + "' for issue " + issue);
      slot[m] = {m, 0.0, false};
      continue;
    }
    if (!(*price > 0.0) || !std::isfinite(*price)) {
      report.rejected.push_back("row " + std::to_string(row) + ": non-positive price " +
                                cols[static_cast<std::size_t>(c_price)] + " for issue " + issue);
      slot[m] = {m, 0.0, false};
      continue;
    }
    slot[m] = {m, *price, true};
    ++report.rows_used;
  }

  if (!duplicate_rows.empty()) {
    std::string rows;
    for (const auto r : duplicate_rows) rows += (rows.empty() ? "" : ", ") + std::to_string(r);
    throw Error(kModule, "duplicate (timestamp, issue) rows: " + rows);
  }
  if (report.rows_total == 0 || all_minutes.empty())
    throw Error(kModule, "'" + path + "' has no parseable data rows");

  // Calendar: union of observed minutes, grouped into sessions by date.
  std::sort(all_minutes.begin(), all_minutes.end());
  all_minutes.erase(std::unique(all_minutes.begin(), all_minutes.end()), all_minutes.end());
  std::vector<Session> sessions;
  for (const Minute m : all_minutes) {
    const Date d = date_of_minute(m);
    if (sessions.empty() || sessions.back().date != d) {
      Session s;
      s.date = d;
      if (const auto it = skip_by_date.find(d); it != skip_by_date.end())
        s.open_skip = it->second;
      sessions.push_back(std::move(s));
    }
    sessions.back().minutes.push_back(m);
  }
  for (auto& s : sessions)
    s.open_skip = std::min<int>(s.open_skip, static_cast<int>(s.minutes.size()) - 1);

  PriceTable table;
  table.report = std::move(report);
  table.calendar = std::make_shared<TradingCalendar>(
      TradingCalendar::from_sessions(std::move(sessions)));

  for (const auto& [issue, obs] : by_issue) {  // std::map: sorted by issue id
    PriceSeries ps;
    ps.issue = issue;
    ps.calendar = table.calendar;
    ps.prices.assign(table.calendar->size(), 0.0);
    ps.mask.assign(table.calendar->size(), 0);
    for (const auto& [minute, o] : obs) {
      if (!o.ok) continue;
      const std::size_t pos = table.calendar->position_of(minute);
      ps.prices[pos] = o.price;
      ps.mask[pos] = 1;
    }
    table.issues.push_back(std::move(ps));
  }
  return table;
}

NewsSeries load_news_csv(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line) || split_csv(line).size() < 2)
    throw Error(kModule, "'" + path + "' lacks a date,count header");
  std::map<Date, double> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() < 2) throw Error(kModule, "short row in news file: " + line);
    const Date d = parse_iso_date(cols[0]);
    const auto v = parse_double(cols[1]);
    if (!v || *v < 0.0) throw Error(kModule, "bad count in news file: " + line);
    if (rows.count(d)) throw Error(kModule, "duplicate date in news file: " + cols[0]);
    rows[d] = *v;
  }
  if (rows.empty()) throw Error(kModule, "'" + path + "' has no data rows");
  NewsSeries news;
  double cum = 0.0;
  for (const auto& [d, v] : rows) {
    news.date.push_back(d);
    news.raw.push_back(v);
    news.adjusted.push_back(v);
    cum += v;
    news.cumulative.push_back(cum);
  }
  return news;
}

Series read_series_csv(const std::string& path, const std::string& column) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw Error(kModule, "'" + path + "' is empty");
  const auto header = split_csv(line);
  if (header.size() < 2)
    throw Error(kModule, "'" + path + "' needs at least two columns");
  const bool timestamped = header[0] == "timestamp";
  if (!timestamped && header[0] != "index")
    throw Error(kModule, "'" + path + "' must lead with a timestamp or index column");

  std::size_t value_col = 1;
  if (!column.empty()) {
    const auto it = std::find(header.begin(), header.end(), column);
    if (it == header.end())
      throw Error(kModule, "'" + path + "' has no column '" + column + "'");
    value_col = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<Minute> minutes;
  std::vector<double> values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() <= value_col)
      throw Error(kModule, "short row " + std::to_string(row) + " in '" + path + "'");
    const auto v = parse_double(cols[value_col]);
    if (!v) throw Error(kModule, "bad value at row " + std::to_string(row) + " in '" + path + "'");
    if (timestamped) minutes.push_back(parse_iso_minute(cols[0]));
    values.push_back(*v);
  }
  if (values.empty()) throw Error(kModule, "'" + path + "' has no data rows");

  if (!timestamped) return Series::unmasked(std::move(values));

  std::vector<Session> sessions;
  Minute prev = std::numeric_limits<Minute>::min();
  for (const Minute m : minutes) {
    if (m <= prev)
      throw Error(kModule, "timestamps in '" + path + "' are not strictly increasing");
    prev = m;
    const Date d = date_of_minute(m);
    if (sessions.empty() || sessions.back().date != d) {
      Session s;
      s.date = d;
      sessions.push_back(std::move(s));
    }
    sessions.back().minutes.push_back(m);
  }
  auto cal = std::make_shared<TradingCalendar>(
      TradingCalendar::from_sessions(std::move(sessions)));
  std::vector<std::uint8_t> mask(values.size(), 1);
  return Series::on_calendar(std::move(cal), std::move(values), std::move(mask));
}

void write_mrw_csv(const std::string& path, const MrwPath& sample) {
  auto out = open_output(path);
  out << "index,dX,omega\n";
  for (std::size_t i = 0; i < sample.increments.size(); ++i)
    out << i << ',' << fmt_double(sample.increments[i]) << ','
        << fmt_double(sample.log_vol[i]) << '\n';
}

void write_event_times_csv(const std::string& path, const std::vector<double>& times) {
  auto out = open_output(path);
  out << "t_minutes\n";
  for (const double t : times) out << fmt_double(t) << '\n';
}

void write_market_mode_csv(const std::string& path, const MarketMode& mode) {
  auto out = open_output(path);
  out << "timestamp,dM\n";
  const Series& s = mode.series;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.valid(i)) continue;  // masked rows omitted
    out << format_iso_minute(s.calendar->minute_at(i)) << ','
        << fmt_double(s.values[i]) << '\n';
  }
}

void write_cov_curve_csv(const std::string& path, const CovCurve& curve) {
  auto out = open_output(path);
  out << "k,cov,n\n";
  for (std::size_t i = 0; i < curve.lag.size(); ++i)
    out << curve.lag[i] << ',' << fmt_double(curve.cov[i]) << ',' << curve.pairs[i] << '\n';
}

void write_spectrum_csv(const std::string& path, const ZetaSpectrum& spec) {
  auto out = open_output(path);
  out << "q,zeta,se\n";
  for (std::size_t i = 0; i < spec.q.size(); ++i)
    out << fmt_double(spec.q[i]) << ',' << fmt_double(spec.zeta[i]) << ','
        << fmt_double(spec.se[i]) << '\n';
}

void write_window_scan_csv(const std::string& path, const Series& source,
                           const std::vector<WindowEstimate>& scan) {
  auto out = open_output(path);
  out << "window_end,lambda2,L,var_omega,r2,flag\n";
  for (const auto& w : scan) {
    if (source.calendar)
      out << format_iso_minute(source.calendar->minute_at(w.end - 1));
    else
      out << w.end - 1;
    out << ',' << fmt_double(w.fit.lambda2) << ','
        << (w.fit.decorr_length ? fmt_double(*w.fit.decorr_length) : "nan") << ','
        << fmt_double(w.fit.var_omega) << ',' << fmt_double(w.fit.r2) << ','
        << w.flag() << '\n';
  }
}

void write_shock_frame_csv(const std::string& path, const ShockFrame& frame) {
  auto out = open_output(path);
  out << "side,t_minutes,N\n";
  // Both sides by increasing |t|: N is the cumulative exceedance count.
  for (std::size_t j = 0; j < frame.before.size(); ++j) {
    const double t = frame.before[frame.before.size() - 1 - j];
    out << "before," << fmt_double(t) << ',' << j + 1 << '\n';
  }
  for (std::size_t j = 0; j < frame.after.size(); ++j)
    out << "after," << fmt_double(frame.after[j]) << ',' << j + 1 << '\n';
}

void write_news_join_csv(const std::string& path, const NewsCoupling& fit) {
  auto out = open_output(path);
  out << "date,var_omega,cum_news\n";
  for (std::size_t i = 0; i < fit.joined_var.size(); ++i)
    out << format_iso_date(fit.joined_var[i].date) << ','
        << fmt_double(fit.joined_var[i].value) << ','
        << fmt_double(fit.joined_cum_news[i]) << '\n';
}

void write_ingestion_report(const std::string& path, const IngestionReport& rep) {
  auto out = open_output(path);
  for (const auto& l : rep.rejected) out << l << '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
  auto out = open_output(path);
  out << content;
}

std::vector<DatedValue> read_window_scan_dates(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw Error(kModule, "'" + path + "' is empty");
  const auto header = split_csv(line);
  int c_end = -1, c_var = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "window_end") c_end = static_cast<int>(i);
    if (header[i] == "var_omega") c_var = static_cast<int>(i);
  }
  if (c_end < 0 || c_var < 0)
    throw Error(kModule, "'" + path + "' lacks window_end/var_omega columns");

  // Several windows may end on one date; keep the last (end-of-day state).
  std::vector<DatedValue> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() <= static_cast<std::size_t>(std::max(c_end, c_var))) continue;
    Minute m;
    try {
      m = parse_iso_minute(cols[static_cast<std::size_t>(c_end)]);
    } catch (const Error&) {
      continue;  // index-grid scan rows carry no dates
    }
    const auto v = parse_double(cols[static_cast<std::size_t>(c_var)]);
    if (!v) continue;
    const DatedValue dv{date_of_minute(m), *v};
    if (!out.empty() && out.back().date == dv.date)
      out.back() = dv;
    else
      out.push_back(dv);
  }
  return out;
}

}  // namespace mrwlab
