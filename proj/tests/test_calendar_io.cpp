#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "mrwlab/calendar.hpp"
#include "mrwlab/error.hpp"
#include "mrwlab/io.hpp"
#include "mrwlab/preprocess.hpp"
#include "test_support.hpp"

using namespace mrwlab;

namespace {
std::string tmp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}
}  // namespace

TEST_SUITE("calendar_io") {

TEST_CASE("iso round trips") {
  CHECK(format_iso_date(parse_iso_date("2008-10-08")) == "2008-10-08");
  CHECK(format_iso_minute(parse_iso_minute("2008-10-08T14:31")) == "2008-10-08T14:31");
  CHECK(format_iso_minute(parse_iso_minute("2008-10-08T14:31:00Z")) == "2008-10-08T14:31");
  CHECK(parse_iso_date("1970-01-01") == 0);
  CHECK(parse_iso_minute("1970-01-02T00:01") == 1441);
  CHECK_THROWS_AS(parse_iso_date("not-a-date"), Error);
}

TEST_CASE("weekday convention") {
  CHECK(weekday(parse_iso_date("2008-10-06")) == 0);  // Monday
  CHECK(weekday(parse_iso_date("2008-10-12")) == 6);  // Sunday
}

TEST_CASE("calendar invariants enforced") {
  Session a{parse_iso_date("2008-01-07"),
            {parse_iso_minute("2008-01-07T08:00"), parse_iso_minute("2008-01-07T08:01")},
            0};
  Session b = a;
  b.date = parse_iso_date("2008-01-06");  // out of order
  for (auto& m : b.minutes) m -= 1440;
  CHECK_THROWS_AS(TradingCalendar::from_sessions({a, b}), Error);

  Session dup = a;
  dup.minutes = {a.minutes[0], a.minutes[0]};  // non-increasing
  CHECK_THROWS_AS(TradingCalendar::from_sessions({dup}), Error);

  Session skip = a;
  skip.open_skip = 2;  // >= session length
  CHECK_THROWS_AS(TradingCalendar::from_sessions({skip}), Error);
}

TEST_CASE("position lookup and session mapping") {
  const auto cal = testsup::synthetic_calendar(3, 5);
  CHECK(cal->size() == 15);
  CHECK(cal->session_of(0) == 0);
  CHECK(cal->session_of(4) == 0);
  CHECK(cal->session_of(5) == 1);
  CHECK(cal->session_of(14) == 2);
  const Minute m = cal->minute_at(7);
  CHECK(cal->position_of(m) == 7);
  CHECK(cal->position_of(m + 100000) == TradingCalendar::npos);
}

TEST_CASE("load_prices: identity ingestion of valid rows") {
  const auto path = tmp_path("prices_ok.csv");
  testsup::write_file(path,
                      "timestamp,issue,price\n"
                      "2008-01-07T08:00,AAA,100\n"
                      "2008-01-07T08:01,AAA,101\n"
                      "2008-01-07T08:02,AAA,102\n"
                      "2008-01-07T08:00,BBB,50\n"
                      "2008-01-07T08:01,BBB,51\n"
                      "2008-01-07T08:02,BBB,52\n");
  const auto table = load_prices(path);
  CHECK(table.issues.size() == 2);
  CHECK(table.calendar->size() == 3);
  CHECK(table.report.rejected.empty());
  CHECK(table.issues[0].issue == "AAA");
  CHECK(table.issues[1].issue == "BBB");
  CHECK(table.issues[1].prices[2] == doctest::Approx(52.0));
}

TEST_CASE("load_prices: bad price rows are masked and reported") {
  const auto path = tmp_path("prices_bad.csv");
  testsup::write_file(path,
                      "timestamp,issue,price\n"
                      "2008-01-07T08:00,AAA,100\n"
                      "2008-01-07T08:01,AAA,-5\n"
                      "2008-01-07T08:02,AAA,abc\n"
                      "2008-01-07T08:03,AAA,103\n");
  const auto table = load_prices(path);
  REQUIRE(table.issues.size() == 1);
  CHECK(table.report.rejected.size() == 2);
  CHECK(table.issues[0].mask[0] == 1);
  CHECK(table.issues[0].mask[1] == 0);
  CHECK(table.issues[0].mask[2] == 0);
  CHECK(table.issues[0].mask[3] == 1);
}

TEST_CASE("load_prices: duplicates rejected with row numbers") {
  const auto path = tmp_path("prices_dup.csv");
  testsup::write_file(path,
                      "timestamp,issue,price\n"
                      "2008-01-07T08:00,AAA,100\n"
                      "2008-01-07T08:00,AAA,101\n");
  CHECK_THROWS_WITH_AS(load_prices(path), doctest::Contains("row"), Error);
}

TEST_CASE("load_prices: zero parseable rows rejected") {
  const auto path = tmp_path("prices_empty.csv");
  testsup::write_file(path, "timestamp,issue,price\n");
  CHECK_THROWS_AS(load_prices(path), Error);
  CHECK_THROWS_AS(load_prices(tmp_path("no_such_file.csv")), Error);
}

TEST_CASE("calendar skips flow into returns") {
  const auto cal_path = tmp_path("skips.csv");
  testsup::write_file(cal_path, "date,open_skip_minutes\n2008-01-07,2\n");
  const auto skips = load_calendar_skips(cal_path);
  CHECK(skips.at(parse_iso_date("2008-01-07")) == 2);

  const auto path = tmp_path("prices_skip.csv");
  testsup::write_file(path,
                      "timestamp,issue,price\n"
                      "2008-01-07T08:00,AAA,100\n"
                      "2008-01-07T08:01,AAA,101\n"
                      "2008-01-07T08:02,AAA,102\n"
                      "2008-01-07T08:03,AAA,103\n");
  const auto table = load_prices(path, skips);
  const Series r = log_returns(table.issues[0], 1);
  // Positions 0,1 are inside the skip; the first usable return is at 3.
  CHECK(r.mask[1] == 0);
  CHECK(r.mask[2] == 0);
  CHECK(r.mask[3] == 1);
}

TEST_CASE("series csv round trip, index grid") {
  const auto path = tmp_path("series_idx.csv");
  MrwPath sample;
  sample.increments = {0.5, -0.25, 0.125};
  sample.log_vol = {0.0, 0.1, -0.1};
  write_mrw_csv(path, sample);
  const Series s = read_series_csv(path, "dX");
  REQUIRE(s.size() == 3);
  CHECK(s.calendar == nullptr);
  CHECK(s.values[1] == doctest::Approx(-0.25));
  const Series w = read_series_csv(path, "omega");
  CHECK(w.values[1] == doctest::Approx(0.1));
  CHECK_THROWS_AS(read_series_csv(path, "nope"), Error);
}

TEST_CASE("series csv round trip, timestamp grid groups sessions by date") {
  const auto path = tmp_path("series_ts.csv");
  testsup::write_file(path,
                      "timestamp,dM\n"
                      "2008-01-07T08:00,0.5\n"
                      "2008-01-07T08:01,-0.5\n"
                      "2008-01-08T08:00,0.25\n");
  const Series s = read_series_csv(path);
  REQUIRE(s.size() == 3);
  REQUIRE(s.calendar != nullptr);
  CHECK(s.calendar->session_count() == 2);
  CHECK(s.calendar->session_begin(1) == 2);
}

TEST_CASE("news csv loads sorted with cumulative counts") {
  const auto path = tmp_path("news.csv");
  testsup::write_file(path,
                      "date,count\n"
                      "2008-09-17,3\n"
                      "2008-09-16,2\n");
  const NewsSeries news = load_news_csv(path);
  REQUIRE(news.size() == 2);
  CHECK(news.date[0] < news.date[1]);
  CHECK(news.cumulative[1] == doctest::Approx(5.0));
  testsup::write_file(path, "date,count\n2008-09-16,2\n2008-09-16,3\n");
  CHECK_THROWS_AS(load_news_csv(path), Error);
}

TEST_CASE("file digest is stable and content sensitive") {
  const auto path = tmp_path("digest.txt");
  testsup::write_file(path, "abc");
  const auto d1 = file_digest(path);
  CHECK(d1 == file_digest(path));
  testsup::write_file(path, "abd");
  CHECK(d1 != file_digest(path));
}

}  // TEST_SUITE
