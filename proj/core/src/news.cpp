#include "mrwlab/news.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mrwlab/error.hpp"
#include "mrwlab/linfit.hpp"

namespace mrwlab {

namespace {
constexpr const char* kModule = "news_coupling";
}

NewsSeries deseasonalize_news(const NewsSeries& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(kModule, "empty news series");
  if (raw.raw.size() != n) throw Error(kModule, "date/count size mismatch");

  std::array<double, 7> wd_sum{};
  std::array<std::int64_t, 7> wd_n{};
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.raw[i] < 0.0) throw Error(kModule, "negative news count");
    const int w = weekday(raw.date[i]);
    wd_sum[static_cast<std::size_t>(w)] += raw.raw[i];
    wd_n[static_cast<std::size_t>(w)] += 1;
    total += raw.raw[i];
  }
  for (int w = 0; w < 7; ++w) {
    if (wd_n[static_cast<std::size_t>(w)] == 0)
      throw Error(kModule, "no observation for weekday " + std::to_string(w));
    if (wd_sum[static_cast<std::size_t>(w)] <= 0.0)
      throw Error(kModule, "all-zero counts on weekday " + std::to_string(w));
  }
  const double period_mean = total / static_cast<double>(n);

  NewsSeries out = raw;
  out.adjusted.resize(n);
  out.cumulative.resize(n);
  double cum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::size_t>(weekday(raw.date[i]));
    const double wd_mean = wd_sum[w] / static_cast<double>(wd_n[w]);
    out.adjusted[i] = raw.raw[i] / wd_mean * period_mean;
    cum += out.adjusted[i];
    out.cumulative[i] = cum;
  }
  return out;
}

NewsCoupling fit_news_coupling(std::span<const DatedValue> var_trajectory,
                               const NewsSeries& news, Date from, Date to) {
  if (from > to) throw Error(kModule, "empty date window");
  if (news.cumulative.size() != news.size())
    throw Error(kModule, "news series has no cumulative counts (deseasonalize first)");

  NewsCoupling fit;
  fit.from = from;
  fit.to = to;

  std::vector<double> lx, ly;
  for (const auto& v : var_trajectory) {
    if (v.date < from || v.date > to) continue;
    const auto it = std::lower_bound(news.date.begin(), news.date.end(), v.date);
    if (it == news.date.end() || *it != v.date) continue;  // no news that day
    const auto i = static_cast<std::size_t>(it - news.date.begin());
    const double cum = news.cumulative[i];
    if (!(v.value > 0.0) || !(cum > 0.0))
      throw Error(kModule, "non-positive value in the fit window on " +
                               format_iso_date(v.date));
    lx.push_back(std::log(cum));
    ly.push_back(std::log(v.value));
    fit.joined_var.push_back(v);
    fit.joined_cum_news.push_back(cum);
  }
  if (lx.size() < 5)
    throw Error(kModule, "fewer than 5 joined observations in the window");

  const LinearFit f = ols(lx, ly);
  fit.alpha = f.slope;
  fit.se = f.slope_se;
  fit.r2 = f.r2;
  fit.prefactor = std::exp(f.intercept);
  fit.n_points = lx.size();
  return fit;
}

}  // namespace mrwlab
