#ifndef MRWLAB_SRC_FFT_UTIL_HPP
#define MRWLAB_SRC_FFT_UTIL_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace mrwlab::detail {

// Unnormalized complex DFT (forward: e^{-2pi i jk/m}); inverse applies no
// 1/m factor either. Plan creation is serialized internally, so concurrent
// calls on disjoint data are safe.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

// All cross-correlation sums needed for masked pairwise-complete
// covariances, for lags 0..max_lag:
//   yy[k] = sum_i y[i] y[i+k]   (y zeroed where the mask is 0)
//   ym[k] = sum_i y[i] m[i+k]
//   my[k] = sum_i m[i] y[i+k]
//   mm[k] = sum_i m[i] m[i+k]   (pair counts)
struct MaskedCorr {
  std::vector<double> yy, ym, my, mm;
};

MaskedCorr masked_corr_fft(const std::vector<double>& y,
                           const std::vector<std::uint8_t>& m, int max_lag);

}  // namespace mrwlab::detail

#endif  // MRWLAB_SRC_FFT_UTIL_HPP
