#include "wglab/experiments.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "wglab/errors.hpp"
#include "wglab/limit_theory.hpp"
#include "wglab/tv_mc.hpp"

namespace wglab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  text = trim(text);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Accepts plain decimals and "p/q" fractions such as 1/48.
double parse_real(std::string_view key, std::string_view text) {
  double value = 0.0;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    double num = 0.0;
    double den = 0.0;
    if (parse_number(text.substr(0, slash), num) && parse_number(text.substr(slash + 1), den) &&
        den != 0.0) {
      return num / den;
    }
  } else if (parse_number(text, value)) {
    return value;
  }
  throw ConfigError("config key '" + std::string(key) + "': cannot parse '" +
                    std::string(trim(text)) + "' as a number");
}

template <typename T>
T parse_integer(std::string_view key, std::string_view text) {
  T value{};
  if (!parse_number(text, value)) {
    throw ConfigError("config key '" + std::string(key) + "': cannot parse '" +
                      std::string(trim(text)) + "' as a non-negative integer");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("config key '" + std::string(key) + "': expected true or false");
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::size_t degrees_for(double c, std::size_t n) {
  const double nn = static_cast<double>(n);
  const double exact = c * nn * nn * nn;
  if (!(exact >= 0.0) || exact > 9.0e15) {
    throw ConfigError("d = round(c n^3) out of range for c=" + format_double(c) +
                      ", n=" + std::to_string(n));
  }
  return static_cast<std::size_t>(std::llround(exact));
}

void ExperimentConfig::validate() const {
  if (c_grid.empty()) throw ConfigError("c_grid is empty");
  if (n_list.empty()) throw ConfigError("n_list is empty");
  if (samples == 0) throw ConfigError("samples must be >= 1");
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    if (!(c_grid[i] > 0.0) || !std::isfinite(c_grid[i])) {
      throw ConfigError("c_grid entry " + format_double(c_grid[i]) + " is not a positive finite number");
    }
    if (i > 0 && !(c_grid[i] > c_grid[i - 1])) throw ConfigError("c_grid must be strictly increasing");
  }
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] == 0) throw ConfigError("n_list entries must be >= 1");
    if (i > 0 && !(n_list[i] > n_list[i - 1])) throw ConfigError("n_list must be strictly increasing");
  }
  for (double c : c_grid) {
    for (std::size_t n : n_list) {
      const std::size_t d = degrees_for(c, n);
      if (d < n) {
        throw ConfigError("grid pair (c=" + format_double(c) + ", n=" + std::to_string(n) +
                          ") gives d=" + std::to_string(d) + " < n");
      }
    }
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  cfg.c_grid.clear();
  cfg.n_list.clear();
  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "c_grid") {
      for (std::string_view item : split(value, ',')) cfg.c_grid.push_back(parse_real(key, item));
    } else if (key == "n_list") {
      for (std::string_view item : split(value, ',')) cfg.n_list.push_back(parse_integer<std::size_t>(key, item));
    } else if (key == "samples") {
      cfg.samples = parse_integer<std::size_t>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "workers") {
      cfg.workers = parse_integer<std::size_t>(key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = std::string(value);
    } else if (key == "emit_svg") {
      cfg.emit_svg = parse_bool(key, value);
    } else if (key == "record_runtime") {
      cfg.record_runtime = parse_bool(key, value);
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  return parse_config(text);
}

ExperimentConfig preset_config(std::string_view name) {
  ExperimentConfig cfg;
  if (name == "figure1") {
    cfg.c_grid = {0.001, 0.002, 0.003, 0.005, 0.0075, 0.01, 0.015, 0.02, 0.03, 0.05};
    cfg.n_list = {32};
  } else if (name == "convergence") {
    cfg.c_grid = {0.25, 0.5, 1.0, 2.0};
    cfg.n_list = {8, 16, 32};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected figure1 or convergence)");
  }
  return cfg;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  rows.reserve(cfg.c_grid.size() * cfg.n_list.size());
  std::uint64_t point = 0;
  for (double c : cfg.c_grid) {
    for (std::size_t n : cfg.n_list) {
      const auto start = std::chrono::steady_clock::now();
      const std::size_t d = degrees_for(c, n);
      // each grid point gets its own block of 2^32 streams
      const RngState rng{cfg.seed, point << 32};
      const TvEstimate est = tv_estimate_goe_side(n, d, cfg.samples, rng, McOptions{cfg.workers});
      SweepRow row;
      row.c = c;
      row.n = n;
      row.d = d;
      row.tv_mc = est.mean;
      row.tv_stderr = est.std_error;
      row.tv_limit = limiting_tv_closed_form(LimitParams{c});
      row.frac_in_q = est.frac_in_q;
      row.seed = cfg.seed;
      if (cfg.record_runtime) {
        row.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
      rows.push_back(row);
      ++point;
    }
  }
  return rows;
}

std::vector<SweepRow> run_and_persist(const ExperimentConfig& cfg) {
  std::vector<SweepRow> rows = run_sweep(cfg);
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + cfg.out_dir.string() + "': " + ec.message());
  emit_csv(rows, cfg.out_dir / "sweep.csv");
  if (cfg.emit_svg) emit_figure1_svg(rows, cfg.out_dir / "figure1.svg");
  return rows;
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += format_double(r.c) + ',' + std::to_string(r.n) + ',' + std::to_string(r.d) + ',' +
           format_double(r.tv_mc) + ',' + format_double(r.tv_stderr) + ',' + format_double(r.tv_limit) +
           ',' + format_double(r.frac_in_q) + ',' + format_double(r.runtime_s) + ',' +
           std::to_string(r.seed) + '\n';
  }
  return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw ConfigError("emit_csv: no rows to write");
  write_file(path, format_csv(rows));
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw ConfigError("CSV: missing or unexpected header");
  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    if (cols.size() != 9) {
      throw ConfigError("CSV line " + std::to_string(i + 1) + ": expected 9 columns, got " +
                        std::to_string(cols.size()));
    }
    SweepRow r;
    bool ok = parse_number(cols[0], r.c) && parse_number(cols[1], r.n) && parse_number(cols[2], r.d) &&
              parse_number(cols[3], r.tv_mc) && parse_number(cols[4], r.tv_stderr) &&
              parse_number(cols[5], r.tv_limit) && parse_number(cols[6], r.frac_in_q) &&
              parse_number(cols[7], r.runtime_s) && parse_number(cols[8], r.seed);
    if (!ok) throw ConfigError("CSV line " + std::to_string(i + 1) + ": malformed field");
    rows.push_back(r);
  }
  return rows;
}

std::vector<SweepRow> load_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

void emit_figure1_svg(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  write_file(path, render_figure1_svg(rows));
}

}  // namespace wglab
