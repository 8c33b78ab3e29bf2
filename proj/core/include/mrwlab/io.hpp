#ifndef MRWLAB_IO_HPP
#define MRWLAB_IO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrwlab/estimate.hpp"
#include "mrwlab/events.hpp"
#include "mrwlab/market_mode.hpp"
#include "mrwlab/news.hpp"
#include "mrwlab/series.hpp"
#include "mrwlab/simulate.hpp"
#include "mrwlab/window_scan.hpp"

namespace mrwlab {

struct IngestionReport {
  std::size_t rows_total = 0;   // data rows seen
  std::size_t rows_used = 0;    // rows that produced an unmasked price
  std::vector<std::string> rejected;  // one line per rejected row
};

struct PriceTable {
  CalendarPtr calendar;
  std::vector<PriceSeries> issues;  // sorted by issue id
  IngestionReport report;
};

/// Long-format price CSV: header "timestamp,issue,price", ISO-8601 minute
/// timestamps (UTC). The calendar is the union of observed minutes grouped
/// into sessions by date; optional per-date opening skips come from
/// `skip_by_date`. Rows with non-positive or non-numeric prices are masked
/// and reported; duplicate (timestamp, issue) pairs reject the file.
PriceTable load_prices(const std::string& path,
                       const std::map<Date, int>& skip_by_date = {});

/// Optional calendar file: header "date,open_skip_minutes".
std::map<Date, int> load_calendar_skips(const std::string& path);

/// News CSV: header "date,count".
NewsSeries load_news_csv(const std::string& path);

/// Generic series reader. A "timestamp,..." header rebuilds sessions by
/// grouping rows by date; an "index,..." header yields an index-grid
/// series. `column` selects the value column by name (empty = second
/// column). Rows absent from a timestamped file are simply not part of the
/// grid (masked rows are omitted on write).
Series read_series_csv(const std::string& path, const std::string& column = "");

void write_mrw_csv(const std::string& path, const MrwPath& sample);          // index,dX,omega
void write_event_times_csv(const std::string& path,
                           const std::vector<double>& times);                 // t_minutes
void write_market_mode_csv(const std::string& path, const MarketMode& mode);  // timestamp,dM
void write_cov_curve_csv(const std::string& path, const CovCurve& curve);     // k,cov,n
void write_spectrum_csv(const std::string& path, const ZetaSpectrum& spec);   // q,zeta,se
void write_window_scan_csv(const std::string& path, const Series& source,
                           const std::vector<WindowEstimate>& scan);
void write_shock_frame_csv(const std::string& path, const ShockFrame& frame);  // side,t_minutes,N
void write_news_join_csv(const std::string& path, const NewsCoupling& fit);    // date,var_omega,cum_news
void write_ingestion_report(const std::string& path, const IngestionReport& rep);
void write_text_file(const std::string& path, const std::string& content);

/// Window-scan CSV reader for the news fit: keeps rows whose window_end
/// parses as a timestamp, returning (date, var_omega).
std::vector<DatedValue> read_window_scan_dates(const std::string& path);

/// Shortest round-trip decimal form of a double ("%.17g").
std::string fmt_double(double v);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace mrwlab

#endif  // MRWLAB_IO_HPP
