#include "wglab/tv_mc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wglab/ensembles.hpp"
#include "wglab/errors.hpp"
#include "wglab/parallel.hpp"
#include "wglab/spectral.hpp"
#include "wglab/summation.hpp"

namespace wglab {
namespace {

std::size_t resolve_workers(const McOptions& opts) {
  return opts.workers == 0 ? default_worker_count() : opts.workers;
}

void validate_mc(std::size_t n, std::size_t d, std::size_t samples) {
  EnsembleParams{n, d}.validate_for_density();
  if (samples == 0) throw InvalidParameter("samples must be >= 1");
}

struct Draw {
  double integrand = 0.0;
  bool in_q = false;
  bool psd = false;
};

// Runs one draw per sample index, sample i using stream i / kSamplesPerStream,
// and writes the results into index-addressed slots.
template <typename DrawFn>
std::vector<Draw> run_draws(std::size_t samples, RngState rng, std::size_t workers, DrawFn&& draw) {
  std::vector<Draw> out(samples);
  const std::size_t chunks = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
  parallel_for_chunks(chunks, workers, [&](std::size_t chunk) {
    RandomStream stream(RngState{rng.seed, rng.stream_id + chunk});
    const std::size_t begin = chunk * kSamplesPerStream;
    const std::size_t end = std::min(samples, begin + kSamplesPerStream);
    for (std::size_t i = begin; i < end; ++i) out[i] = draw(stream, i);
  });
  return out;
}

TvEstimate assemble(const std::vector<Draw>& draws, Side side, RngState rng, std::size_t n,
                    std::size_t d) {
  std::vector<double> values;
  values.reserve(draws.size());
  std::size_t in_q_count = 0;
  std::size_t psd_count = 0;
  for (const Draw& draw : draws) {
    values.push_back(draw.integrand);
    in_q_count += draw.in_q ? 1 : 0;
    psd_count += draw.psd ? 1 : 0;
  }
  const MeanSummary summary = summarize(values);
  TvEstimate est;
  est.mean = summary.mean;
  est.std_error = summary.std_error;
  est.samples = summary.samples;
  est.side = side;
  est.seed = rng.seed;
  est.n = n;
  est.d = d;
  est.frac_in_q = static_cast<double>(in_q_count) / static_cast<double>(draws.size());
  est.frac_psd = static_cast<double>(psd_count) / static_cast<double>(draws.size());
  set_confidence_interval(est);
  return est;
}

}  // namespace

std::string_view to_string(Side side) {
  return side == Side::goe_side ? "goe" : "wishart";
}

Side parse_side(std::string_view text) {
  if (text == "goe") return Side::goe_side;
  if (text == "wishart") return Side::wishart_side;
  throw ConfigError("unknown side '" + std::string(text) + "' (expected goe or wishart)");
}

MeanSummary summarize(std::span<const double> values) {
  MeanSummary s;
  s.samples = values.size();
  if (values.empty()) return s;
  const double count = static_cast<double>(values.size());
  s.mean = compensated_sum(values) / count;
  if (values.size() > 1) {
    CompensatedSum sq;
    for (double v : values) sq.add((v - s.mean) * (v - s.mean));
    const double variance = sq.value() / (count - 1.0);
    s.std_error = std::sqrt(variance / count);
  }
  return s;
}

void set_confidence_interval(TvEstimate& est) {
  const double half = kZ99 * est.std_error;
  est.ci_lo = std::clamp(est.mean - half, 0.0, 1.0);
  est.ci_hi = std::clamp(est.mean + half, 0.0, 1.0);
}

double goe_side_integrand(double alpha) {
  if (alpha >= 0.0) return 0.0;
  if (alpha == -std::numeric_limits<double>::infinity()) return 1.0;
  return -std::expm1(alpha);
}

double wishart_side_integrand(double alpha) { return goe_side_integrand(-alpha); }

TvEstimate tv_estimate_goe_side(std::size_t n, std::size_t d, std::size_t samples, RngState rng,
                                McOptions opts) {
  validate_mc(n, d, samples);
  const auto draws = run_draws(samples, rng, resolve_workers(opts), [&](RandomStream& stream, std::size_t) {
    const SymmetricMatrix a = shift_scale_goe(sample_goe(n, stream), d);
    const Spectrum s = symmetric_eigenvalues(a);
    Draw draw;
    draw.integrand = goe_side_integrand(alpha_exact(s, n, d));
    draw.in_q = in_q(s, n, d);
    draw.psd = s.min() >= -tol_psd(static_cast<double>(d));
    return draw;
  });
  return assemble(draws, Side::goe_side, rng, n, d);
}

TvEstimate tv_estimate_wishart_side(std::size_t n, std::size_t d, std::size_t samples, RngState rng,
                                    McOptions opts) {
  validate_mc(n, d, samples);
  const auto draws = run_draws(samples, rng, resolve_workers(opts), [&](RandomStream& stream, std::size_t) {
    const Spectrum s = symmetric_eigenvalues(sample_wishart(n, d, stream));
    Draw draw;
    draw.integrand = wishart_side_integrand(alpha_exact(s, n, d));
    draw.in_q = in_q(s, n, d);
    draw.psd = s.min() >= -tol_psd(static_cast<double>(d));
    return draw;
  });
  return assemble(draws, Side::wishart_side, rng, n, d);
}

std::vector<ProfileRecord> tv_profile(std::size_t n, std::size_t d, std::size_t samples, RngState rng,
                                      McOptions opts) {
  validate_mc(n, d, samples);
  std::vector<ProfileRecord> records(samples);
  const std::size_t chunks = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
  parallel_for_chunks(chunks, resolve_workers(opts), [&](std::size_t chunk) {
    RandomStream stream(RngState{rng.seed, rng.stream_id + chunk});
    const std::size_t begin = chunk * kSamplesPerStream;
    const std::size_t end = std::min(samples, begin + kSamplesPerStream);
    for (std::size_t i = begin; i < end; ++i) {
      const SymmetricMatrix a = shift_scale_goe(sample_goe(n, stream), d);
      const Spectrum s = symmetric_eigenvalues(a);
      ProfileRecord& rec = records[i];
      rec.index = i;
      rec.breakdown = s_decomposition(s, n, d);
      rec.integrand = goe_side_integrand(rec.breakdown.alpha_exact);
    }
  });
  return records;
}

}  // namespace wglab
