// Command-line front end: single-point estimates, limit evaluations, CLT
// covariance checks, grid sweeps and per-draw profiles.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wglab/errors.hpp"
#include "wglab/experiments.hpp"
#include "wglab/limit_theory.hpp"
#include "wglab/parallel.hpp"
#include "wglab/tv_mc.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

void print_kv(const std::string& key, double value) {
  std::cout << key << '=' << wglab::format_double(value) << '\n';
}

void print_estimate(const wglab::TvEstimate& est) {
  std::cout << "side=" << wglab::to_string(est.side) << '\n'
            << "n=" << est.n << '\n'
            << "d=" << est.d << '\n'
            << "samples=" << est.samples << '\n'
            << "seed=" << est.seed << '\n';
  print_kv("mean", est.mean);
  print_kv("stderr", est.std_error);
  print_kv("ci_lo", est.ci_lo);
  print_kv("ci_hi", est.ci_hi);
  print_kv("frac_in_q", est.frac_in_q);
  print_kv("frac_psd", est.frac_psd);
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wishart vs GOE total variation laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t workers = 0;
  app.add_option("--workers", workers, "worker threads (default: WGLAB_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);

  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::string side = "goe";
  auto* tv = app.add_subcommand("tv", "Monte Carlo estimate of TV(W(n,d), M(n,d))");
  tv->add_option("--n", n, "matrix order")->required()->check(CLI::PositiveNumber);
  tv->add_option("--d", d, "degrees of freedom (d >= n)")->required()->check(CLI::PositiveNumber);
  tv->add_option("--samples", samples, "Monte Carlo draws")->check(CLI::PositiveNumber);
  tv->add_option("--seed", seed, "random seed");
  tv->add_option("--side", side, "sampling side")->check(CLI::IsMember({"goe", "wishart"}));

  double c = 1.0;
  auto* limit = app.add_subcommand("limit", "limiting TV at d / n^3 -> c");
  limit->add_option("--c", c, "limit ratio c > 0")->required();

  std::size_t reps = 10000;
  auto* clt = app.add_subcommand("clt", "empirical covariance of (sum mu, sum mu^3) for GOE");
  clt->add_option("--n", n, "matrix order")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  clt->add_option("--reps", reps, "independent draws")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  clt->add_option("--seed", seed, "random seed");

  std::string config_path;
  std::string preset;
  std::string out_dir;
  auto* sweep = app.add_subcommand("sweep", "run a (c, n) grid, write sweep.csv and figure1.svg");
  auto* config_opt = sweep->add_option("--config", config_path, "key = value config file");
  auto* preset_opt = sweep->add_option("--preset", preset, "built-in grid")
                         ->check(CLI::IsMember({"figure1", "convergence"}));
  config_opt->excludes(preset_opt);
  sweep->add_option("--out", out_dir, "override out_dir");
  std::optional<std::size_t> sweep_samples;
  sweep->add_option("--samples", sweep_samples, "override samples per point")->check(CLI::PositiveNumber);
  std::optional<std::uint64_t> sweep_seed;
  sweep->add_option("--seed", sweep_seed, "override seed");

  auto* profile = app.add_subcommand("profile", "per-draw alpha decomposition as CSV");
  profile->add_option("--n", n, "matrix order")->required()->check(CLI::PositiveNumber);
  profile->add_option("--d", d, "degrees of freedom (d >= n)")->required()->check(CLI::PositiveNumber);
  profile->add_option("--samples", samples, "Monte Carlo draws")->check(CLI::PositiveNumber);
  profile->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const wglab::McOptions opts{workers};
    if (*tv) {
      const wglab::RngState rng{seed, 0};
      const auto est = side == "goe" ? wglab::tv_estimate_goe_side(n, d, samples, rng, opts)
                                     : wglab::tv_estimate_wishart_side(n, d, samples, rng, opts);
      print_estimate(est);
    } else if (*limit) {
      const wglab::LimitParams p{c};
      print_kv("closed_form", wglab::limiting_tv_closed_form(p));
      print_kv("quadrature", wglab::limiting_tv_quadrature(p));
      print_kv("asymptote", wglab::asymptotic_tail(p));
    } else if (*clt) {
      const auto est = wglab::clt_covariance_estimate(n, reps, wglab::RngState{seed, 0}, opts);
      print_kv("c11", est.cov.c11);
      print_kv("c12", est.cov.c12);
      print_kv("c22", est.cov.c22);
      print_kv("mean1", est.mean1);
      print_kv("mean3", est.mean3);
    } else if (*sweep) {
      if (config_path.empty() && preset.empty()) throw wglab::ConfigError("sweep needs --config or --preset");
      wglab::ExperimentConfig cfg =
          config_path.empty() ? wglab::preset_config(preset) : wglab::load_config(config_path);
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      if (sweep_samples) cfg.samples = *sweep_samples;
      if (sweep_seed) cfg.seed = *sweep_seed;
      if (workers != 0) cfg.workers = workers;
      const auto rows = wglab::run_and_persist(cfg);
      std::cout << "rows=" << rows.size() << '\n'
                << "csv=" << (cfg.out_dir / "sweep.csv").string() << '\n';
      if (cfg.emit_svg) std::cout << "svg=" << (cfg.out_dir / "figure1.svg").string() << '\n';
    } else if (*profile) {
      const auto records = wglab::tv_profile(n, d, samples, wglab::RngState{seed, 0}, opts);
      std::cout << "index,alpha,s0,s1,s2,s3,s4,remainder,in_q,psd,integrand\n";
      for (const auto& r : records) {
        const auto& b = r.breakdown;
        std::cout << r.index << ',' << wglab::format_double(b.alpha_exact) << ','
                  << wglab::format_double(b.s0) << ',' << wglab::format_double(b.s1) << ','
                  << wglab::format_double(b.s2) << ',' << wglab::format_double(b.s3) << ','
                  << wglab::format_double(b.s4) << ',' << wglab::format_double(b.remainder) << ','
                  << flag(b.in_q) << ',' << flag(b.psd) << ',' << wglab::format_double(r.integrand) << '\n';
      }
    }
  } catch (const wglab::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const wglab::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
