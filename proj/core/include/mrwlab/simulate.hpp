#ifndef MRWLAB_SIMULATE_HPP
#define MRWLAB_SIMULATE_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "mrwlab/series.hpp"

namespace mrwlab {

/// Multifractal-random-walk parameterization. The increment process is
/// dX[i] = eps[i] * exp(omega[i]) with eps white Gaussian of variance
/// sigma^2 * delta_t and omega a stationary Gaussian log-volatility with
/// logarithmically decaying covariance of strength lambda2 out to the
/// decorrelation length.
struct MrwParams {
  double sigma = 1.0;          // volatility scale per sqrt(minute)
  double lambda2 = 0.0;        // intermittency coefficient, >= 0
  double decorr_length = 2.0;  // L, minutes; > delta_t
  int delta_t = 1;             // sampling interval, minutes; >= 1

  void validate() const;  // throws mrwlab::Error
  /// Var(omega) = lambda2 * ln(L / delta_t).
  double var_omega() const;
};

/// Memory kernel of the log-volatility covariance:
/// rho(k) = L / ((k+1) delta_t) while (k+1) delta_t <= L, else 1, so
/// Cov(omega[i], omega[i+k]) = lambda2 * ln rho(k).
double rho(const MrwParams& p, std::int64_t k);

/// Stationary Gaussian log-volatility of length n with mean -Var(omega)
/// and covariance lambda2 * ln rho(|i-j|). Deterministic per (params, n,
/// seed).
std::vector<double> simulate_omega(const MrwParams& p, std::size_t n,
                                   std::uint64_t seed);

struct MrwPath {
  std::vector<double> increments;  // dX
  std::vector<double> log_vol;     // omega
};

/// Full path: eps and omega are drawn from independent named sub-streams of
/// `seed`, so changing lambda2 never perturbs the eps draw.
MrwPath simulate_mrw_path(const MrwParams& p, std::size_t n, std::uint64_t seed);

/// Increments only, wrapped as an index-grid Series.
Series simulate_mrw(const MrwParams& p, std::size_t n, std::uint64_t seed);

/// Foreshock/aftershock cumulative-count exponents around a main shock:
/// |N(t) - N(0)| = amp * |t|^beta on each side.
struct OmoriParams {
  double beta_before = 0.3;
  double beta_after = 0.7;
  double amp_before = 1.0;
  double amp_after = 1.0;
  double horizon = 1000.0;  // minutes each side, >= 10
  /// Additionally require 0 < beta_before < beta_after < 1.
  bool enforce_order = false;

  void validate() const;
  double expected_before() const;
  double expected_after() const;
};

/// Event times in signed minutes around the main shock at t = 0 (included),
/// sorted ascending. The points invert the exact cumulative power law at
/// unit-mean exponential increments, so E|N(t)| = amp * |t|^beta holds
/// exactly on each side.
std::vector<double> simulate_omori_events(const OmoriParams& p,
                                          std::uint64_t seed);

/// Named sub-stream of a master seed; deterministic everywhere.
std::mt19937_64 substream(std::uint64_t seed, std::string_view name);

namespace detail {
/// Sample a zero-mean stationary Gaussian vector of length n whose
/// autocovariance sequence is `cov` (cov[0..n-1]; lags past cov.size()
/// are treated as zero). Circulant embedding with a spectrum check;
/// falls back to a dense factorization for n <= 2^14 when the embedding
/// is not nonnegative definite.
std::vector<double> sample_stationary_gaussian(const std::vector<double>& cov,
                                               std::size_t n,
                                               std::mt19937_64& rng,
                                               bool force_dense = false);
}  // namespace detail

}  // namespace mrwlab

#endif  // MRWLAB_SIMULATE_HPP
