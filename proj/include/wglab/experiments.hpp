#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wglab {

struct ExperimentConfig {
  std::vector<double> c_grid;
  std::vector<std::size_t> n_list;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t workers = 0;  // 0: default_worker_count()
  std::filesystem::path out_dir = "out";
  bool emit_svg = true;
  // Wall-clock timing makes runtime_s nondeterministic; off by default so
  // repeated runs produce identical files.
  bool record_runtime = false;

  // Throws ConfigError naming the offending entry.
  void validate() const;
};

// Flat "key = value" text; '#' starts a comment; lists are comma separated.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Named built-in grids: "figure1" (c in [0.001, 0.05], n = 32) and
// "convergence" (c in {0.25, 0.5, 1, 2}, n in {8, 16, 32}).
ExperimentConfig preset_config(std::string_view name);

// round(c n^3)
std::size_t degrees_for(double c, std::size_t n);

struct SweepRow {
  double c = 0.0;
  std::size_t n = 0;
  std::size_t d = 0;
  double tv_mc = 0.0;
  double tv_stderr = 0.0;
  double tv_limit = 0.0;
  double frac_in_q = 0.0;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "c,n,d,tv_mc,tv_stderr,tv_limit,frac_in_q,runtime_s,seed";

// Runs every (c, n) pair in grid order. Does not write files.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

// run_sweep plus sweep.csv (and figure1.svg when emit_svg) in cfg.out_dir.
std::vector<SweepRow> run_and_persist(const ExperimentConfig& cfg);

std::string format_csv(const std::vector<SweepRow>& rows);
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
std::vector<SweepRow> parse_csv(std::string_view text);
std::vector<SweepRow> load_csv(const std::filesystem::path& path);

// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

std::string render_figure1_svg(const std::vector<SweepRow>& rows);
void emit_figure1_svg(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

}  // namespace wglab
