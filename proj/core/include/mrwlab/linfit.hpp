#ifndef MRWLAB_LINFIT_HPP
#define MRWLAB_LINFIT_HPP

#include <cstddef>
#include <span>

namespace mrwlab {

/// Ordinary least squares y = intercept + slope * x with standard errors
/// from the residual variance. r2 is 1 for an exactly flat target.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double intercept_se = 0.0;
  double r2 = 0.0;
  std::size_t n = 0;
};

LinearFit ols(std::span<const double> x, std::span<const double> y);

}  // namespace mrwlab

#endif  // MRWLAB_LINFIT_HPP
