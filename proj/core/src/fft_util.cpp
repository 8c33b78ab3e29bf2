#include "fft_util.hpp"

#include <fftw3.h>

#include <bit>
#include <mutex>

namespace mrwlab::detail {

namespace {
// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, bool inverse) {
  const int n = static_cast<int>(data.size());
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(n, raw, raw, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
}

MaskedCorr masked_corr_fft(const std::vector<double>& y,
                           const std::vector<std::uint8_t>& m, int max_lag) {
  const std::size_t n = y.size();
  const std::size_t fft_n =
      std::bit_ceil(n + static_cast<std::size_t>(max_lag) + 1);

  std::vector<std::complex<double>> a(fft_n), b(fft_n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = m[i] ? y[i] : 0.0;
    b[i] = m[i] ? 1.0 : 0.0;
  }
  fft_inplace(a, false);
  fft_inplace(b, false);

  // r_{xy}[k] = sum_i x[i] y[i+k] = IDFT(conj(X) .* Y)[k] / m.
  const double inv = 1.0 / static_cast<double>(fft_n);
  auto correlate = [&](const std::vector<std::complex<double>>& X,
                       const std::vector<std::complex<double>>& Y) {
    std::vector<std::complex<double>> prod(fft_n);
    for (std::size_t j = 0; j < fft_n; ++j) prod[j] = std::conj(X[j]) * Y[j];
    fft_inplace(prod, true);
    std::vector<double> out(static_cast<std::size_t>(max_lag) + 1);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = prod[k].real() * inv;
    return out;
  };

  MaskedCorr c;
  c.yy = correlate(a, a);
  c.ym = correlate(a, b);
  c.my = correlate(b, a);
  c.mm = correlate(b, b);
  return c;
}

}  // namespace mrwlab::detail
