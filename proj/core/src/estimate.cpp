#include "mrwlab/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fft_util.hpp"
#include "mrwlab/error.hpp"
#include "mrwlab/linfit.hpp"
#include "mrwlab/window_scan.hpp"

namespace mrwlab {

namespace {

constexpr const char* kModule = "mrw_estimator";
constexpr std::int64_t kMinPairs = 100;

// Above this many multiply-adds the FFT cross-correlation path wins.
constexpr double kDirectCostLimit = 3e7;

struct LogAbsSeries {
  std::vector<double> y;           // log|x|, zeroed where invalid
  std::vector<std::uint8_t> m;     // valid and nonzero
  std::int64_t excluded_zeros = 0;
};

LogAbsSeries log_abs(const Series& x) {
  LogAbsSeries out;
  out.y.assign(x.size(), 0.0);
  out.m.assign(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.valid(i)) continue;
    if (x.values[i] == 0.0) {
      ++out.excluded_zeros;  // log 0 undefined, dropped pairwise
      continue;
    }
    out.y[i] = std::log(std::fabs(x.values[i]));
    out.m[i] = 1;
  }
  return out;
}

}  // namespace

CovCurve log_abs_cov(const Series& x, int max_lag) {
  if (max_lag < 1) throw Error(kModule, "max_lag must be >= 1");
  if (x.size() < static_cast<std::size_t>(10) * static_cast<std::size_t>(max_lag))
    throw Error(kModule, "series shorter than 10 * max_lag");

  const LogAbsSeries s = log_abs(x);
  const std::size_t n = s.y.size();

  CovCurve curve;
  curve.delta_t = x.delta_t;
  curve.excluded_zeros = s.excluded_zeros;

  auto emit = [&](int k, double sum_yy, double sum_y1, double sum_y2, double pairs) {
    const auto np = static_cast<std::int64_t>(std::llround(pairs));
    if (np < kMinPairs) return;
    const double mu1 = sum_y1 / pairs;
    const double mu2 = sum_y2 / pairs;
    const double cov = (sum_yy - pairs * mu1 * mu2) / (pairs - 1.0);
    curve.lag.push_back(k);
    curve.cov.push_back(cov);
    curve.pairs.push_back(np);
  };

  if (static_cast<double>(n) * max_lag <= kDirectCostLimit) {
    for (int k = 1; k <= max_lag; ++k) {
      double syy = 0.0, s1 = 0.0, s2 = 0.0;
      std::int64_t np = 0;
      const std::size_t kk = static_cast<std::size_t>(k);
      for (std::size_t i = 0; i + kk < n; ++i) {
        if (!s.m[i] || !s.m[i + kk]) continue;
        syy += s.y[i] * s.y[i + kk];
        s1 += s.y[i];
        s2 += s.y[i + kk];
        ++np;
      }
      emit(k, syy, s1, s2, static_cast<double>(np));
    }
  } else {
    const detail::MaskedCorr c = detail::masked_corr_fft(s.y, s.m, max_lag);
    for (int k = 1; k <= max_lag; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      emit(k, c.yy[kk], c.ym[kk], c.my[kk], std::llround(c.mm[kk]));
    }
  }

  if (curve.lag.empty())
    throw Error(kModule, "no lag reached " + std::to_string(kMinPairs) + " valid pairs");
  return curve;
}

MrwFit fit_lambda_L(const CovCurve& curve, int k_min) {
  if (k_min < 1) throw Error(kModule, "k_min must be >= 1");

  // Fit range [k_min, k_cross): k_cross is the first lag at or past k_min
  // whose empirical covariance is non-positive, operationalizing the
  // vanishing of the log-covariance past the decorrelation length.
  std::vector<double> lx, ly;
  int k_last = 0;
  for (std::size_t i = 0; i < curve.lag.size(); ++i) {
    if (curve.lag[i] < k_min) continue;
    if (curve.cov[i] <= 0.0) break;
    lx.push_back(std::log(static_cast<double>(curve.lag[i]) * curve.delta_t));
    ly.push_back(curve.cov[i]);
    k_last = curve.lag[i];
  }
  if (lx.size() < 8)
    throw Error(kModule, "fewer than 8 usable lags above k_min=" + std::to_string(k_min));

  const LinearFit f = ols(lx, ly);

  MrwFit fit;
  fit.delta_t = curve.delta_t;
  fit.excluded_zeros = curve.excluded_zeros;
  fit.k_min = k_min;
  fit.k_max = k_last;
  fit.r2 = f.r2;
  if (f.slope >= 0.0) {
    fit.degenerate = true;  // clamp: no resolvable intermittency
    fit.lambda2 = 0.0;
    fit.var_omega = 0.0;
    return fit;
  }
  fit.lambda2 = -f.slope;
  fit.decorr_length = std::exp(f.intercept / fit.lambda2);
  fit.var_omega = fit.lambda2 * std::log(*fit.decorr_length / curve.delta_t);
  return fit;
}

MomentTable moment_scaling(const Series& x, const std::vector<double>& q_list,
                           const std::vector<int>& scale_list, std::int64_t min_cell) {
  if (x.delta_t != 1) throw Error(kModule, "moment scaling expects a 1-minute series");
  if (q_list.empty() || scale_list.empty()) throw Error(kModule, "empty q or scale list");
  for (const double q : q_list)
    if (q < 0.0 || q > 5.0)
      throw Error(kModule, "moment order must lie in [0, 5]");
  for (const int sc : scale_list)
    if (sc < 1 || sc > 4096 || (sc & (sc - 1)) != 0)
      throw Error(kModule, "scales must be dyadic within [1, 4096]");
  if (!std::is_sorted(scale_list.begin(), scale_list.end()))
    throw Error(kModule, "scales must be ascending");

  MomentTable table;
  table.q = q_list;
  table.scale = scale_list;
  const std::size_t ns = scale_list.size();
  table.moment.assign(q_list.size() * ns, std::numeric_limits<double>::quiet_NaN());
  table.count.assign(q_list.size() * ns, 0);
  table.heavy_tail.assign(q_list.size() * ns, 0);

  for (std::size_t is = 0; is < ns; ++is) {
    const Series coarse = aggregate_returns(x, scale_list[is]);
    std::vector<double> mags(coarse.values.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::fabs(coarse.values[i]);
    const auto n = static_cast<std::int64_t>(mags.size());
    if (n < min_cell) continue;

    // 99th-percentile magnitude for the heavy-tail contribution flag.
    std::vector<double> sorted = mags;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t cut = (sorted.size() * 99) / 100;
    const double p99 = sorted[std::min(cut, sorted.size() - 1)];

    for (std::size_t iq = 0; iq < q_list.size(); ++iq) {
      const double q = q_list[iq];
      double total = 0.0, tail = 0.0;
      for (const double a : mags) {
        const double v = q == 0.0 ? 1.0 : std::pow(a, q);
        total += v;
        if (a > p99) tail += v;
      }
      const std::size_t cell = iq * ns + is;
      table.moment[cell] = total / static_cast<double>(n);
      table.count[cell] = n;
      table.heavy_tail[cell] = (total > 0.0 && tail > 0.5 * total) ? 1 : 0;
    }
  }
  return table;
}

ZetaSpectrum fit_zeta(const MomentTable& table) {
  ZetaSpectrum spec;
  spec.scale_min = 0;
  spec.scale_max = 0;

  for (std::size_t iq = 0; iq < table.q.size(); ++iq) {
    std::vector<double> lx, ly;
    for (std::size_t is = 0; is < table.scale.size(); ++is) {
      const double m = table.at(iq, is);
      if (std::isnan(m) || !(m > 0.0)) continue;
      lx.push_back(std::log(static_cast<double>(table.scale[is])));
      ly.push_back(std::log(m));
      spec.scale_min = spec.scale_min == 0 ? table.scale[is]
                                           : std::min(spec.scale_min, table.scale[is]);
      spec.scale_max = std::max(spec.scale_max, table.scale[is]);
    }
    if (lx.size() < 4) continue;  // too few usable scales for this q
    const LinearFit f = ols(lx, ly);
    spec.q.push_back(table.q[iq]);
    spec.zeta.push_back(f.slope);
    spec.se.push_back(f.slope_se);
  }
  if (spec.q.size() < 2)
    throw Error(kModule, "spectrum fit needs at least 2 moment orders");

  // One-parameter fit of zeta_q = q/2 - (q(q-2)/2) lambda2.
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < spec.q.size(); ++i) {
    const double q = spec.q[i];
    const double c = q * (q - 2.0) / 2.0;
    const double d = q / 2.0 - spec.zeta[i];
    num += c * d;
    den += c * c;
  }
  spec.lambda2_spec = den > 0.0 ? std::max(num / den, 0.0) : 0.0;
  return spec;
}

double zeta_theoretical(double q, double lambda2) {
  return (q - q * (q - 2.0) * lambda2) / 2.0;
}

}  // namespace mrwlab
