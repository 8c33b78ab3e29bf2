#include "mrwlab/simulate.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstring>

#include "fft_util.hpp"
#include "mrwlab/error.hpp"

namespace mrwlab {

namespace {

constexpr const char* kModule = "mrw_simulator";

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::mt19937_64 substream(std::uint64_t seed, std::string_view name) {
  const std::uint64_t h = fnv1a64(name);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

void MrwParams::validate() const {
  if (!(sigma > 0.0)) throw Error(kModule, "sigma must be > 0");
  if (!(lambda2 >= 0.0)) throw Error(kModule, "lambda2 must be >= 0");
  if (delta_t < 1) throw Error(kModule, "delta_t must be >= 1");
  if (!(decorr_length > static_cast<double>(delta_t)))
    throw Error(kModule, "decorrelation length must exceed delta_t");
}

double MrwParams::var_omega() const {
  return lambda2 * std::log(decorr_length / static_cast<double>(delta_t));
}

double rho(const MrwParams& p, std::int64_t k) {
  if (k < 0) throw Error(kModule, "lag must be >= 0");
  const double span = static_cast<double>(k + 1) * static_cast<double>(p.delta_t);
  return span <= p.decorr_length ? p.decorr_length / span : 1.0;
}

namespace detail {

std::vector<double> sample_stationary_gaussian(const std::vector<double>& cov,
                                               std::size_t n, std::mt19937_64& rng,
                                               bool force_dense) {
  if (n < 2) throw Error(kModule, "need n >= 2");
  if (cov.empty()) throw Error(kModule, "empty covariance sequence");

  auto cov_at = [&](std::size_t k) { return k < cov.size() ? cov[k] : 0.0; };
  std::normal_distribution<double> normal(0.0, 1.0);

  if (!force_dense) {
    // Circulant embedding: even extension of the covariance sequence on a
    // ring of size m >= 2n, eigenvalues via FFT.
    const std::size_t m = std::bit_ceil(2 * n);
    std::vector<std::complex<double>> row(m);
    for (std::size_t j = 0; j <= m / 2; ++j) row[j] = cov_at(j);
    for (std::size_t j = m / 2 + 1; j < m; ++j) row[j] = cov_at(m - j);
    fft_inplace(row, false);

    double max_eig = 0.0, min_eig = 0.0;
    for (const auto& e : row) {
      max_eig = std::max(max_eig, e.real());
      min_eig = std::min(min_eig, e.real());
    }
    const double tol = 1e-8 * std::max(max_eig, 1.0);
    if (min_eig >= -tol) {
      // x = Re(F^H (sqrt(eig) .* (a + ib))) / sqrt(m) has covariance C.
      std::vector<std::complex<double>> v(m);
      for (std::size_t j = 0; j < m; ++j) {
        const double s = std::sqrt(std::max(row[j].real(), 0.0));
        const double re = normal(rng);
        const double im = normal(rng);
        v[j] = std::complex<double>(s * re, s * im);
      }
      fft_inplace(v, true);
      const double scale = 1.0 / std::sqrt(static_cast<double>(m));
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = v[i].real() * scale;
      return out;
    }
    if (n > (1u << 14))
      throw Error(kModule,
                  "circulant embedding spectrum is negative (min eigenvalue " +
                      std::to_string(min_eig) + ") and n > 2^14, no dense fallback");
  }

  // Dense fallback: Cholesky of the Toeplitz covariance.
  if (n > (1u << 14)) throw Error(kModule, "dense factorization limited to n <= 2^14");
  Eigen::MatrixXd C(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          cov_at(i > j ? i - j : j - i);
  Eigen::LLT<Eigen::MatrixXd> llt(C);
  if (llt.info() != Eigen::Success)
    throw Error(kModule, "covariance matrix is not positive definite");
  Eigen::VectorXd g(n);
  for (std::size_t i = 0; i < n; ++i) g(static_cast<Eigen::Index>(i)) = normal(rng);
  Eigen::VectorXd x = llt.matrixL() * g;
  return std::vector<double>(x.data(), x.data() + n);
}

}  // namespace detail

std::vector<double> simulate_omega(const MrwParams& p, std::size_t n,
                                   std::uint64_t seed) {
  p.validate();
  if (n < 2) throw Error(kModule, "need n >= 2");
  if (p.lambda2 == 0.0) return std::vector<double>(n, 0.0);

  const double mean = -p.var_omega();
  // Carry the analytic covariance out to the embedding half-length so the
  // even extension decays to zero without a truncation kink.
  const std::size_t m_half = std::bit_ceil(2 * n) / 2;
  const auto max_k = static_cast<std::size_t>(p.decorr_length / p.delta_t);
  std::vector<double> cov(std::min(max_k + 1, m_half + 1));
  for (std::size_t k = 0; k < cov.size(); ++k)
    cov[k] = p.lambda2 * std::log(rho(p, static_cast<std::int64_t>(k)));

  auto rng = substream(seed, "omega");
  std::vector<double> omega = detail::sample_stationary_gaussian(cov, n, rng);
  for (double& w : omega) w += mean;
  return omega;
}

MrwPath simulate_mrw_path(const MrwParams& p, std::size_t n, std::uint64_t seed) {
  MrwPath path;
  path.log_vol = simulate_omega(p, n, seed);
  auto rng = substream(seed, "epsilon");
  std::normal_distribution<double> normal(0.0, p.sigma * std::sqrt(static_cast<double>(p.delta_t)));
  path.increments.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    path.increments[i] = normal(rng) * std::exp(path.log_vol[i]);
  return path;
}

Series simulate_mrw(const MrwParams& p, std::size_t n, std::uint64_t seed) {
  Series s = Series::unmasked(simulate_mrw_path(p, n, seed).increments, p.delta_t);
  return s;
}

void OmoriParams::validate() const {
  // (0, 1]: beta = 1 is the homogeneous-rate edge case.
  if (!(beta_before > 0.0 && beta_before <= 1.0))
    throw Error(kModule, "beta_before must lie in (0,1]");
  if (!(beta_after > 0.0 && beta_after <= 1.0))
    throw Error(kModule, "beta_after must lie in (0,1]");
  if (enforce_order && !(beta_before < beta_after && beta_after < 1.0))
    throw Error(kModule, "ordered mode requires 0 < beta_before < beta_after < 1");
  if (!(amp_before > 0.0 && amp_after > 0.0))
    throw Error(kModule, "amplitudes must be > 0");
  if (!(horizon >= 10.0)) throw Error(kModule, "horizon must be >= 10 minutes");
}

double OmoriParams::expected_before() const {
  return amp_before * std::pow(horizon, beta_before);
}

double OmoriParams::expected_after() const {
  return amp_after * std::pow(horizon, beta_after);
}

std::vector<double> simulate_omori_events(const OmoriParams& p, std::uint64_t seed) {
  p.validate();
  if (p.expected_before() < 20.0 || p.expected_after() < 20.0)
    throw Error(kModule, "expected events per side below 20, unfittable");

  // Time-rescaling inversion: with cumulative intensity amp*t^beta, the
  // event times are t_j = (S_j/amp)^{1/beta} at unit-exponential partial
  // sums S_j.
  auto draw_side = [&](double beta, double amp, std::mt19937_64 rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> times;
    double s = 0.0;
    for (;;) {
      s += expo(rng);
      const double t = std::pow(s / amp, 1.0 / beta);
      if (t > p.horizon) break;
      times.push_back(t);
    }
    return times;
  };

  const auto after = draw_side(p.beta_after, p.amp_after, substream(seed, "omori.after"));
  auto before = draw_side(p.beta_before, p.amp_before, substream(seed, "omori.before"));

  std::vector<double> events;
  events.reserve(before.size() + after.size() + 1);
  for (auto it = before.rbegin(); it != before.rend(); ++it) events.push_back(-*it);
  events.push_back(0.0);  // the main shock
  events.insert(events.end(), after.begin(), after.end());
  return events;
}

}  // namespace mrwlab
