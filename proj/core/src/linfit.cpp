#include "mrwlab/linfit.hpp"

#include <cmath>

#include "mrwlab/error.hpp"

namespace mrwlab {

LinearFit ols(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error("linfit", "regression needs >= 2 matched points");
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) throw Error("linfit", "degenerate regressor (zero spread)");

  LinearFit f;
  f.n = n;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;

  const double ssr = syy - f.slope * sxy;  // residual sum of squares
  const double s2 = n > 2 ? std::max(ssr, 0.0) / static_cast<double>(n - 2) : 0.0;
  f.slope_se = std::sqrt(s2 / sxx);
  double sum_x2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum_x2 += x[i] * x[i];
  f.intercept_se = std::sqrt(s2 * sum_x2 / (static_cast<double>(n) * sxx));
  f.r2 = syy > 0.0 ? 1.0 - std::max(ssr, 0.0) / syy : 1.0;
  if (f.r2 < 0.0) f.r2 = 0.0;
  if (f.r2 > 1.0) f.r2 = 1.0;
  return f;
}

}  // namespace mrwlab
