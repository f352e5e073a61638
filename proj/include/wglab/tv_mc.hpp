#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wglab/densities.hpp"
#include "wglab/rng.hpp"

namespace wglab {

enum class Side { goe_side, wishart_side };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

// Samples per random stream. Sample i is drawn from stream
// (seed, stream_base + i / kSamplesPerStream), so estimates do not depend on
// the number of workers.
inline constexpr std::size_t kSamplesPerStream = 256;

struct MeanSummary {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Mean and standard error (sample sd / sqrt(count); 0 for a single value) of
// per-sample values, summed in order with compensation.
MeanSummary summarize(std::span<const double> values);

struct TvEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::size_t samples = 0;
  Side side = Side::goe_side;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  double frac_in_q = 0.0;
  double frac_psd = 0.0;
};

// Fills the interval fields from mean / std_error (99% normal interval clamped
// to [0, 1]).
void set_confidence_interval(TvEstimate& est);

// (1 - e^alpha)_+, with alpha = -inf (non-PSD draw) giving 1.
double goe_side_integrand(double alpha);
// (1 - e^-alpha)_+
double wishart_side_integrand(double alpha);

struct McOptions {
  std::size_t workers = 0;  // 0: default_worker_count()
};

// TV(W(n,d), M(n,d)) = E_{A ~ M(n,d)} (1 - f(A) 1{A psd} / g(A))_+
TvEstimate tv_estimate_goe_side(std::size_t n, std::size_t d, std::size_t samples,
                                RngState rng, McOptions opts = {});

// Same distance from the Wishart side: E_{W ~ W(n,d)} (1 - g(W) / f(W))_+
TvEstimate tv_estimate_wishart_side(std::size_t n, std::size_t d, std::size_t samples,
                                    RngState rng, McOptions opts = {});

struct ProfileRecord {
  std::size_t index = 0;
  AlphaBreakdown breakdown;
  double integrand = 0.0;
};

// Per-draw diagnostics of the GOE-side estimator. Uses exactly the draws of
// tv_estimate_goe_side for the same arguments.
std::vector<ProfileRecord> tv_profile(std::size_t n, std::size_t d, std::size_t samples,
                                      RngState rng, McOptions opts = {});

}  // namespace wglab
