// mrwlab: crash-precursor analysis pipeline for minute-resolution return
// series. Subcommands cover synthetic MRW / event-stream generation, the
// market-mode construction, covariance and moment-spectrum estimation, the
// sliding-window variance trajectory, shock-frame power-law fits, and the
// news-coupling fit. Every run writes a manifest.json (config echo, input
// digests, library version, seed) beside its outputs; identical config and
// inputs reproduce data outputs byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mrwlab/error.hpp"
#include "mrwlab/estimate.hpp"
#include "mrwlab/events.hpp"
#include "mrwlab/io.hpp"
#include "mrwlab/market_mode.hpp"
#include "mrwlab/news.hpp"
#include "mrwlab/preprocess.hpp"
#include "mrwlab/simulate.hpp"
#include "mrwlab/version.hpp"
#include "mrwlab/window_scan.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunContext {
  std::string command;
  std::string out_dir = ".";
  std::map<std::string, std::string> config;
  std::map<std::string, std::string> inputs;  // path -> digest
  std::vector<std::string> outputs;
  std::optional<std::uint64_t> seed;

  std::string path(const std::string& name) const {
    return (fs::path(out_dir) / name).string();
  }
  void note_input(const std::string& p) {
    if (!p.empty()) inputs[p] = mrwlab::file_digest(p);
  }
  void write_manifest() const {
    json m;
    m["command"] = command;
    m["config"] = config;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["version"] = MRWLAB_VERSION;
    if (seed) m["seed"] = *seed;
    mrwlab::write_text_file(path("manifest.json"), m.dump(2) + "\n");
  }
};

std::string flag_str(double v) { return mrwlab::fmt_double(v); }

// Series positions are addressed either by integer index or, for
// timestamped series, by an ISO-8601 minute.
std::size_t parse_position(const mrwlab::Series& x, const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos == s.size()) return static_cast<std::size_t>(v);
  } catch (...) {
  }
  if (!x.calendar)
    throw mrwlab::Error("cli", "position '" + s + "' is not an index and the series has no timestamps");
  const auto p = x.calendar->position_of(mrwlab::parse_iso_minute(s));
  if (p == mrwlab::TradingCalendar::npos)
    throw mrwlab::Error("cli", "timestamp '" + s + "' is not on the series grid");
  return p;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

void add_simulate(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "simulate", "Generate a synthetic MRW increment path; writes mrw.csv "
                  "with columns index,dX,omega.");
  auto params = std::make_shared<mrwlab::MrwParams>();
  auto n = std::make_shared<std::size_t>(1u << 16);
  auto seed = std::make_shared<std::uint64_t>(1);
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--sigma", params->sigma, "volatility scale per sqrt(minute)")
      ->capture_default_str();
  cmd->add_option("--lambda2", params->lambda2, "intermittency coefficient")
      ->capture_default_str();
  cmd->add_option("--L", params->decorr_length, "decorrelation length, minutes")
      ->capture_default_str();
  cmd->add_option("--dt", params->delta_t, "sampling interval, minutes")
      ->capture_default_str();
  cmd->add_option("--n", *n, "path length, samples")->capture_default_str();
  cmd->add_option("--seed", *seed, "master seed")->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([params, n, seed, ctx] {
    ctx->command = "simulate";
    ctx->seed = *seed;
    ctx->config = {{"sigma", flag_str(params->sigma)},
                   {"lambda2", flag_str(params->lambda2)},
                   {"L", flag_str(params->decorr_length)},
                   {"dt", std::to_string(params->delta_t)},
                   {"n", std::to_string(*n)},
                   {"seed", std::to_string(*seed)}};
    const auto path = mrwlab::simulate_mrw_path(*params, *n, *seed);
    mrwlab::write_mrw_csv(ctx->path("mrw.csv"), path);
    ctx->outputs = {"mrw.csv"};
    ctx->write_manifest();
  });
}

void add_simulate_omori(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "simulate-omori", "Generate a synthetic foreshock/aftershock event "
                        "stream; writes omori_events.csv with column t_minutes.");
  auto params = std::make_shared<mrwlab::OmoriParams>();
  auto seed = std::make_shared<std::uint64_t>(1);
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--beta-b", params->beta_before, "foreshock exponent in (0,1)")
      ->capture_default_str();
  cmd->add_option("--beta-a", params->beta_after, "aftershock exponent in (0,1)")
      ->capture_default_str();
  cmd->add_option("--c-b", params->amp_before, "foreshock amplitude")
      ->capture_default_str();
  cmd->add_option("--c-a", params->amp_after, "aftershock amplitude")
      ->capture_default_str();
  cmd->add_option("--horizon", params->horizon, "minutes simulated on each side")
      ->capture_default_str();
  cmd->add_flag("--require-order", params->enforce_order,
                "require beta_b < beta_a");
  cmd->add_option("--seed", *seed, "master seed")->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([params, seed, ctx] {
    ctx->command = "simulate-omori";
    ctx->seed = *seed;
    ctx->config = {{"beta_b", flag_str(params->beta_before)},
                   {"beta_a", flag_str(params->beta_after)},
                   {"c_b", flag_str(params->amp_before)},
                   {"c_a", flag_str(params->amp_after)},
                   {"horizon", flag_str(params->horizon)},
                   {"require_order", params->enforce_order ? "1" : "0"},
                   {"seed", std::to_string(*seed)}};
    const auto events = mrwlab::simulate_omori_events(*params, *seed);
    mrwlab::write_event_times_csv(ctx->path("omori_events.csv"), events);
    ctx->outputs = {"omori_events.csv"};
    ctx->write_manifest();
  });
}

void add_market_mode(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "market-mode", "Average of volatility-normalized returns from a "
                     "timestamp,issue,price CSV; writes market_mode.csv "
                     "(timestamp,dM; masked rows omitted) and "
                     "ingestion_report.txt.");
  auto prices = std::make_shared<std::string>();
  auto calendar = std::make_shared<std::string>();
  auto raw = std::make_shared<bool>(false);
  auto opt = std::make_shared<mrwlab::MarketModeOptions>();
  auto dt = std::make_shared<int>(1);
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--prices", *prices, "price CSV (timestamp,issue,price)")->required();
  cmd->add_option("--calendar", *calendar, "optional date,open_skip_minutes CSV");
  cmd->add_option("--dt", *dt, "return horizon, minutes")->capture_default_str();
  cmd->add_flag("--raw", *raw, "skip the intraday de-seasonalization");
  cmd->add_option("--coverage", opt->coverage,
                  "fraction of issues that must be present at t")
      ->capture_default_str();
  cmd->add_option("--min-bucket", opt->profile_min_samples,
                  "minimum samples per intraday bucket")
      ->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([prices, calendar, raw, opt, dt, ctx] {
    ctx->command = "market-mode";
    opt->deseasonalize = !*raw;
    ctx->config = {{"prices", *prices},
                   {"calendar", *calendar},
                   {"dt", std::to_string(*dt)},
                   {"raw", *raw ? "1" : "0"},
                   {"coverage", flag_str(opt->coverage)},
                   {"min_bucket", std::to_string(opt->profile_min_samples)}};
    ctx->note_input(*prices);
    std::map<mrwlab::Date, int> skips;
    if (!calendar->empty()) {
      skips = mrwlab::load_calendar_skips(*calendar);
      ctx->note_input(*calendar);
    }
    const auto table = mrwlab::load_prices(*prices, skips);
    std::vector<mrwlab::NamedSeries> returns;
    for (const auto& issue : table.issues)
      returns.push_back({issue.issue, mrwlab::log_returns(issue, *dt)});
    const auto mode = mrwlab::compute_market_mode(returns, *opt);
    mrwlab::write_market_mode_csv(ctx->path("market_mode.csv"), mode);
    mrwlab::write_ingestion_report(ctx->path("ingestion_report.txt"), table.report);
    ctx->outputs = {"market_mode.csv", "ingestion_report.txt"};
    ctx->write_manifest();
  });
}

void add_estimate(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "estimate", "Fit (lambda2, L, Var(omega)) from the log-absolute-return "
                  "covariance of a series CSV; writes fit.txt (key=value) and "
                  "covcurve.csv (k,cov,n).");
  auto input = std::make_shared<std::string>();
  auto column = std::make_shared<std::string>();
  auto max_lag = std::make_shared<int>(0);
  auto k_min = std::make_shared<int>(20);
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--input", *input, "series CSV (timestamp,... or index,...)")->required();
  cmd->add_option("--column", *column, "value column name (default: second column)");
  cmd->add_option("--max-lag", *max_lag, "maximum lag, samples (0 = n/10 capped at 16384)")
      ->capture_default_str();
  cmd->add_option("--k-min", *k_min, "smallest fitted lag, samples")->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([input, column, max_lag, k_min, ctx] {
    ctx->command = "estimate";
    ctx->config = {{"input", *input},
                   {"column", *column},
                   {"max_lag", std::to_string(*max_lag)},
                   {"k_min", std::to_string(*k_min)}};
    ctx->note_input(*input);
    const auto series = mrwlab::read_series_csv(*input, *column);
    int lag = *max_lag;
    if (lag <= 0) lag = static_cast<int>(std::min<std::size_t>(series.size() / 10, 16384));
    const auto curve = mrwlab::log_abs_cov(series, lag);
    const auto fit = mrwlab::fit_lambda_L(curve, *k_min);
    mrwlab::write_cov_curve_csv(ctx->path("covcurve.csv"), curve);
    std::ostringstream rep;
    rep << "lambda2=" << mrwlab::fmt_double(fit.lambda2) << '\n'
        << "L=" << (fit.decorr_length ? mrwlab::fmt_double(*fit.decorr_length) : "nan") << '\n'
        << "var_omega=" << mrwlab::fmt_double(fit.var_omega) << '\n'
        << "k_min=" << fit.k_min << '\n'
        << "k_max=" << fit.k_max << '\n'
        << "r2=" << mrwlab::fmt_double(fit.r2) << '\n'
        << "excluded_zeros=" << fit.excluded_zeros << '\n'
        << "degenerate=" << (fit.degenerate ? 1 : 0) << '\n'
        << "delta_t=" << fit.delta_t << '\n'
        << "sigma_hat=" << mrwlab::fmt_double(mrwlab::masked_stddev(series) /
                                              std::sqrt(static_cast<double>(series.delta_t)))
        << '\n'
        << "n=" << series.size() << '\n';
    mrwlab::write_text_file(ctx->path("fit.txt"), rep.str());
    ctx->outputs = {"covcurve.csv", "fit.txt"};
    ctx->write_manifest();
  });
}

void add_spectrum(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "spectrum", "Moment-scaling spectrum zeta_q of a series CSV; writes "
                  "spectrum.csv (q,zeta,se) and spectrum.txt.");
  auto input = std::make_shared<std::string>();
  auto column = std::make_shared<std::string>();
  auto q_csv = std::make_shared<std::string>("1,2,3,4,5");
  auto scale_csv = std::make_shared<std::string>("1,2,4,8,16,32,64,128,256,512,1024,2048,4096");
  auto min_cell = std::make_shared<std::int64_t>(50);
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--input", *input, "series CSV (1-minute spacing)")->required();
  cmd->add_option("--column", *column, "value column name (default: second column)");
  cmd->add_option("--q", *q_csv, "comma-separated moment orders in [0,5]")
      ->capture_default_str();
  cmd->add_option("--scales", *scale_csv, "comma-separated dyadic scales in [1,4096]")
      ->capture_default_str();
  cmd->add_option("--min-cell", *min_cell, "minimum samples per (q,scale) cell")
      ->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([input, column, q_csv, scale_csv, min_cell, ctx] {
    ctx->command = "spectrum";
    ctx->config = {{"input", *input},
                   {"column", *column},
                   {"q", *q_csv},
                   {"scales", *scale_csv},
                   {"min_cell", std::to_string(*min_cell)}};
    ctx->note_input(*input);
    const auto series = mrwlab::read_series_csv(*input, *column);
    const auto table = mrwlab::moment_scaling(series, parse_double_list(*q_csv),
                                              parse_int_list(*scale_csv), *min_cell);
    const auto spec = mrwlab::fit_zeta(table);
    mrwlab::write_spectrum_csv(ctx->path("spectrum.csv"), spec);
    std::ostringstream rep;
    rep << "lambda2_spec=" << mrwlab::fmt_double(spec.lambda2_spec) << '\n'
        << "scale_min=" << spec.scale_min << '\n'
        << "scale_max=" << spec.scale_max << '\n'
        << "n_q=" << spec.q.size() << '\n';
    mrwlab::write_text_file(ctx->path("spectrum.txt"), rep.str());
    ctx->outputs = {"spectrum.csv", "spectrum.txt"};
    ctx->write_manifest();
  });
}

void add_window_scan(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "window-scan", "Sliding-window Var(omega) trajectory; writes "
                     "window_scan.csv (window_end,lambda2,L,var_omega,r2,flag).");
  auto input = std::make_shared<std::string>();
  auto column = std::make_shared<std::string>();
  auto cfg = std::make_shared<mrwlab::WindowScanConfig>();
  auto detrend = std::make_shared<std::string>("none");
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--input", *input, "series CSV")->required();
  cmd->add_option("--column", *column, "value column name (default: second column)");
  cmd->add_option("--window", cfg->window, "window width, input positions")->required();
  cmd->add_option("--stride", cfg->stride,
                  "step between window ends (default: one trading day)");
  cmd->add_option("--dt", cfg->delta_t, "coarse return scale, minutes")
      ->capture_default_str();
  cmd->add_option("--detrend", *detrend, "none | local")->capture_default_str();
  cmd->add_option("--block", cfg->detrend_block, "detrend block, samples")
      ->capture_default_str();
  cmd->add_option("--k-min", cfg->k_min, "smallest fitted lag, samples")
      ->capture_default_str();
  cmd->add_option("--max-lag", cfg->max_lag, "maximum lag (0 = window/(10 dt))")
      ->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([input, column, cfg, detrend, ctx] {
    ctx->command = "window-scan";
    if (*detrend == "local")
      cfg->detrend = mrwlab::DetrendMode::local_block;
    else if (*detrend != "none")
      throw mrwlab::Error("cli", "unknown detrend mode '" + *detrend + "'");
    ctx->note_input(*input);
    const auto series = mrwlab::read_series_csv(*input, *column);
    if (cfg->stride == 0) {
      if (!series.calendar)
        throw mrwlab::Error("cli", "--stride is required for index-grid series");
      const auto s0 = series.calendar->session(0);
      cfg->stride = s0.minutes.size();
    }
    ctx->config = {{"input", *input},
                   {"column", *column},
                   {"window", std::to_string(cfg->window)},
                   {"stride", std::to_string(cfg->stride)},
                   {"dt", std::to_string(cfg->delta_t)},
                   {"detrend", *detrend},
                   {"block", std::to_string(cfg->detrend_block)},
                   {"k_min", std::to_string(cfg->k_min)},
                   {"max_lag", std::to_string(cfg->max_lag)}};
    const auto scan = mrwlab::window_scan(series, *cfg);
    std::size_t warned = 0;
    for (const auto& w : scan) warned += w.length_exceeds_window ? 1 : 0;
    if (warned > 0)
      std::fprintf(stderr,
                   "warning: window_scan: fitted L exceeds the window width in "
                   "%zu of %zu windows\n",
                   warned, scan.size());
    mrwlab::write_window_scan_csv(ctx->path("window_scan.csv"), series, scan);
    ctx->outputs = {"window_scan.csv"};
    ctx->write_manifest();
  });
}

void add_omori(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "omori", "Cumulative exceedance counts around the main shock and the "
               "per-side power-law fits; writes omori_events_m<T>.csv "
               "(side,t_minutes,N) per threshold and omori_fit.txt.");
  auto input = std::make_shared<std::string>();
  auto column = std::make_shared<std::string>();
  auto from = std::make_shared<std::string>();
  auto to = std::make_shared<std::string>();
  auto thr_csv = std::make_shared<std::string>("4,5,6,7");
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--input", *input, "series CSV")->required();
  cmd->add_option("--column", *column, "value column name (default: second column)");
  cmd->add_option("--search-from", *from, "main-shock search start (index or timestamp)");
  cmd->add_option("--search-to", *to, "main-shock search end, exclusive");
  cmd->add_option("--thresholds", *thr_csv, "comma-separated sigma multiples")
      ->capture_default_str();
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([input, column, from, to, thr_csv, ctx] {
    ctx->command = "omori";
    ctx->config = {{"input", *input},
                   {"column", *column},
                   {"search_from", *from},
                   {"search_to", *to},
                   {"thresholds", *thr_csv}};
    ctx->note_input(*input);
    const auto series = mrwlab::read_series_csv(*input, *column);
    const std::size_t lo = from->empty() ? 0 : parse_position(series, *from);
    const std::size_t hi = to->empty() ? series.size() : parse_position(series, *to);
    const std::size_t shock = mrwlab::find_main_shock(series, lo, hi);

    std::ostringstream rep;
    rep << "origin=";
    if (series.calendar)
      rep << mrwlab::format_iso_minute(series.calendar->minute_at(shock));
    else
      rep << shock;
    rep << '\n';

    for (const double m : parse_double_list(*thr_csv)) {
      const auto frame = mrwlab::cumulative_frequency(series, shock, m);
      const auto fit = mrwlab::fit_omori(frame);
      std::ostringstream name;
      name << "omori_events_m" << m << ".csv";
      mrwlab::write_shock_frame_csv(ctx->path(name.str()), frame);
      ctx->outputs.push_back(name.str());

      rep << "threshold=" << mrwlab::fmt_double(m) << '\n'
          << "sigma_ref=" << mrwlab::fmt_double(frame.sigma_ref) << '\n'
          << "before_n=" << frame.before.size() << '\n'
          << "after_n=" << frame.after.size() << '\n';
      if (fit.before)
        rep << "beta_b=" << mrwlab::fmt_double(fit.before->beta) << '\n'
            << "se_b=" << mrwlab::fmt_double(fit.before->se) << '\n'
            << "r2_b=" << mrwlab::fmt_double(fit.before->r2) << '\n';
      if (fit.after)
        rep << "beta_a=" << mrwlab::fmt_double(fit.after->beta) << '\n'
            << "se_a=" << mrwlab::fmt_double(fit.after->se) << '\n'
            << "r2_a=" << mrwlab::fmt_double(fit.after->r2) << '\n';
      rep << "ordered_ok=" << (fit.ordered_ok ? 1 : 0) << '\n';
    }
    mrwlab::write_text_file(ctx->path("omori_fit.txt"), rep.str());
    ctx->outputs.push_back("omori_fit.txt");
    ctx->write_manifest();
  });
}

void add_news_fit(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "news-fit", "Power-law coupling of Var(omega) to cumulative weekday-"
                  "adjusted news; writes news_fit.txt and news_join.csv "
                  "(date,var_omega,cum_news).");
  auto var_path = std::make_shared<std::string>();
  auto news_path = std::make_shared<std::string>();
  auto from = std::make_shared<std::string>();
  auto to = std::make_shared<std::string>();
  auto no_adjust = std::make_shared<bool>(false);
  auto ctx = std::make_shared<RunContext>();
  cmd->add_option("--var", *var_path, "window-scan CSV with timestamped window_end")->required();
  cmd->add_option("--news", *news_path, "news CSV (date,count)")->required();
  cmd->add_option("--from", *from, "fit window start date (ISO)")->required();
  cmd->add_option("--to", *to, "fit window end date (ISO)")->required();
  cmd->add_flag("--no-weekday-adjust", *no_adjust, "use raw daily counts");
  cmd->add_option("--out-dir", ctx->out_dir, "output directory")
      ->envname("MRWLAB_OUT")
      ->capture_default_str();
  cmd->callback([var_path, news_path, from, to, no_adjust, ctx] {
    ctx->command = "news-fit";
    ctx->config = {{"var", *var_path},
                   {"news", *news_path},
                   {"from", *from},
                   {"to", *to},
                   {"weekday_adjust", *no_adjust ? "0" : "1"}};
    ctx->note_input(*var_path);
    ctx->note_input(*news_path);
    const auto traj = mrwlab::read_window_scan_dates(*var_path);
    auto news = mrwlab::load_news_csv(*news_path);
    if (!*no_adjust) news = mrwlab::deseasonalize_news(news);
    const auto fit = mrwlab::fit_news_coupling(traj, news, mrwlab::parse_iso_date(*from),
                                               mrwlab::parse_iso_date(*to));
    mrwlab::write_news_join_csv(ctx->path("news_join.csv"), fit);
    std::ostringstream rep;
    rep << "alpha_n=" << mrwlab::fmt_double(fit.alpha) << '\n'
        << "se=" << mrwlab::fmt_double(fit.se) << '\n'
        << "r2=" << mrwlab::fmt_double(fit.r2) << '\n'
        << "prefactor=" << mrwlab::fmt_double(fit.prefactor) << '\n'
        << "n=" << fit.n_points << '\n'
        << "from=" << mrwlab::format_iso_date(fit.from) << '\n'
        << "to=" << mrwlab::format_iso_date(fit.to) << '\n';
    mrwlab::write_text_file(ctx->path("news_fit.txt"), rep.str());
    ctx->outputs = {"news_join.csv", "news_fit.txt"};
    ctx->write_manifest();
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mrwlab: multifractal volatility, shock-frame and news-coupling "
               "analysis of minute-resolution return series"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; command-line flags win");

  add_simulate(app);
  add_simulate_omori(app);
  add_market_mode(app);
  add_estimate(app);
  add_spectrum(app);
  add_window_scan(app);
  add_omori(app);
  add_news_fit(app);

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const mrwlab::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", e.module().c_str(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: cli: %s\n", e.what());
    return 1;
  }
  return 0;
}
