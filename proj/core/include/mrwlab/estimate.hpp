#ifndef MRWLAB_ESTIMATE_HPP
#define MRWLAB_ESTIMATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mrwlab/series.hpp"

namespace mrwlab {

/// Empirical covariance of log|x[i]| with log|x[i+k]| per lag. Pairs are
/// formed over all positions where both entries are unmasked and nonzero;
/// lags with fewer than 100 pairs are omitted.
struct CovCurve {
  std::vector<int> lag;              // strictly increasing, >= 1, sample units
  std::vector<double> cov;
  std::vector<std::int64_t> pairs;   // pair count per kept lag
  std::int64_t excluded_zeros = 0;   // unmasked exact-zero values dropped
  int delta_t = 1;                   // minutes per sample of the source
};

CovCurve log_abs_cov(const Series& x, int max_lag);

/// Result of the log-lag regression of the covariance curve:
/// Cov(k) = -lambda2 * ln(k*delta_t) + lambda2 * ln(L).
struct MrwFit {
  double lambda2 = 0.0;
  std::optional<double> decorr_length;  // minutes; absent when degenerate
  double var_omega = 0.0;               // lambda2 * ln(L/delta_t)
  int k_min = 0;                        // fit range, sample-lag units
  int k_max = 0;
  double r2 = 0.0;
  std::int64_t excluded_zeros = 0;
  bool degenerate = false;  // non-negative fitted slope clamped to lambda2=0
  int delta_t = 1;
};

/// OLS of Cov(k) on ln(k*delta_t) over k in [k_min, k_cross) where k_cross
/// is the first lag at or past k_min with non-positive covariance. Natural
/// logs throughout; only the L estimate depends on the base convention.
MrwFit fit_lambda_L(const CovCurve& curve, int k_min);

/// Sample moments M(q, scale) of coarse returns. Coarse returns are sums of
/// `scale` consecutive unmasked one-minute values tiled within sessions
/// (non-overlapping); cells with fewer than `min_cell` samples are omitted.
struct MomentTable {
  std::vector<double> q;
  std::vector<int> scale;  // dyadic minutes, ascending
  std::vector<double> moment;        // q-major [iq*scale.size()+is], NaN = omitted
  std::vector<std::int64_t> count;
  std::vector<std::uint8_t> heavy_tail;  // top 1% of samples carries > 50%

  double at(std::size_t iq, std::size_t is) const { return moment[iq * scale.size() + is]; }
  std::int64_t count_at(std::size_t iq, std::size_t is) const { return count[iq * scale.size() + is]; }
  bool heavy_at(std::size_t iq, std::size_t is) const { return heavy_tail[iq * scale.size() + is] != 0; }
};

MomentTable moment_scaling(const Series& x, const std::vector<double>& q_list,
                           const std::vector<int>& scale_list,
                           std::int64_t min_cell = 50);

/// Scaling exponents zeta_q of M(q, scale) ~ scale^zeta_q, with the
/// one-parameter intermittency fit lambda2_spec of the quadratic spectrum.
struct ZetaSpectrum {
  std::vector<double> q;
  std::vector<double> zeta;
  std::vector<double> se;  // regression standard error per q
  int scale_min = 0;
  int scale_max = 0;
  double lambda2_spec = 0.0;
};

ZetaSpectrum fit_zeta(const MomentTable& table);

/// zeta_q = (q - q(q-2) lambda2) / 2.
double zeta_theoretical(double q, double lambda2);

}  // namespace mrwlab

#endif  // MRWLAB_ESTIMATE_HPP
