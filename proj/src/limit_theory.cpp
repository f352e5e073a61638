#include "wglab/limit_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wglab/ensembles.hpp"
#include "wglab/errors.hpp"
#include "wglab/parallel.hpp"
#include "wglab/quadrature.hpp"
#include "wglab/spectral.hpp"
#include "wglab/summation.hpp"

namespace wglab {

void LimitParams::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidParameter("c must be positive and finite, got " + std::to_string(c));
  }
}

double limiting_tv_closed_form(LimitParams p) {
  p.validate();
  return std::erf(1.0 / (4.0 * std::sqrt(3.0) * std::sqrt(p.c)));
}

double limiting_tv_quadrature(LimitParams p) {
  p.validate();
  const double root_c = std::sqrt(p.c);
  const double shift = -1.0 / (12.0 * p.c);
  const double slope = 1.0 / (6.0 * root_c);
  const double norm = 1.0 / std::sqrt(12.0 * std::numbers::pi);
  const Integrand integrand = [=](double z) {
    return -std::expm1(shift + slope * z) * norm * std::exp(-z * z / 12.0);
  };
  // 1 - exp(shift + slope z) >= 0 exactly when z <= 1 / (2 sqrt c)
  const QuadResult r = integrate_to(integrand, 1.0 / (2.0 * root_c), QuadOptions{1e-12, 1e-13, 4000});
  if (!r.converged) {
    throw std::runtime_error("limiting_tv_quadrature: no convergence at c=" + std::to_string(p.c) +
                             " (error estimate " + std::to_string(r.abs_error) + ")");
  }
  return r.value;
}

TvEstimate limiting_tv_mc(LimitParams p, std::size_t samples, RngState rng, McOptions opts) {
  p.validate();
  if (samples == 0) throw InvalidParameter("limiting_tv_mc: samples must be >= 1");
  const double root_c = std::sqrt(p.c);
  const double s0 = -1.0 / (12.0 * p.c);
  const double sd_y = std::sqrt(2.0);
  const double sd_z = std::sqrt(6.0);

  std::vector<double> values(samples);
  const std::size_t chunks = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
  const std::size_t workers = opts.workers == 0 ? default_worker_count() : opts.workers;
  parallel_for_chunks(chunks, workers, [&](std::size_t chunk) {
    RandomStream stream(RngState{rng.seed, rng.stream_id + chunk});
    const std::size_t begin = chunk * kSamplesPerStream;
    const std::size_t end = std::min(samples, begin + kSamplesPerStream);
    for (std::size_t i = begin; i < end; ++i) {
      const double y = sd_y * stream.normal();
      const double z = sd_z * stream.normal();
      const double n1 = y;
      const double n3 = 3.0 * y + z;
      values[i] = goe_side_integrand(s0 - n1 / (2.0 * root_c) + n3 / (6.0 * root_c));
    }
  });

  const MeanSummary summary = summarize(values);
  TvEstimate est;
  est.mean = summary.mean;
  est.std_error = summary.std_error;
  est.samples = samples;
  est.seed = rng.seed;
  set_confidence_interval(est);
  return est;
}

double asymptotic_tail(LimitParams p) {
  p.validate();
  return 1.0 / (2.0 * std::sqrt(3.0 * std::numbers::pi) * std::sqrt(p.c));
}

CltEstimate clt_covariance_estimate(std::size_t n, std::size_t reps, RngState rng, McOptions opts) {
  if (n < 2) throw InvalidParameter("clt_covariance_estimate: n must be >= 2");
  if (reps < 2) throw InvalidParameter("clt_covariance_estimate: reps must be >= 2");

  std::vector<double> first(reps);
  std::vector<double> third(reps);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const std::size_t chunks = (reps + kSamplesPerStream - 1) / kSamplesPerStream;
  const std::size_t workers = opts.workers == 0 ? default_worker_count() : opts.workers;
  parallel_for_chunks(chunks, workers, [&](std::size_t chunk) {
    RandomStream stream(RngState{rng.seed, rng.stream_id + chunk});
    const std::size_t begin = chunk * kSamplesPerStream;
    const std::size_t end = std::min(reps, begin + kSamplesPerStream);
    for (std::size_t r = begin; r < end; ++r) {
      const Spectrum s = symmetric_eigenvalues(sample_goe(n, stream));
      CompensatedSum p1;
      CompensatedSum p3;
      for (double lambda : s.eigenvalues) {
        const double mu = lambda * scale;
        p1.add(mu);
        p3.add(mu * mu * mu);
      }
      first[r] = p1.value();
      third[r] = p3.value();
    }
  });

  CltEstimate est;
  est.reps = reps;
  const double count = static_cast<double>(reps);
  est.mean1 = compensated_sum(first) / count;
  est.mean3 = compensated_sum(third) / count;
  CompensatedSum s11;
  CompensatedSum s12;
  CompensatedSum s22;
  for (std::size_t r = 0; r < reps; ++r) {
    const double a = first[r] - est.mean1;
    const double b = third[r] - est.mean3;
    s11.add(a * a);
    s12.add(a * b);
    s22.add(b * b);
  }
  est.cov = CovMatrix2{s11.value() / (count - 1.0), s12.value() / (count - 1.0),
                       s22.value() / (count - 1.0)};
  return est;
}

SLimit s_limit_vector(double c) {
  LimitParams{c}.validate();
  SLimit out;
  out.deterministic = {-1.0 / (12.0 * c), 0.0, 1.0 / (4.0 * c), 0.0, -1.0 / (4.0 * c)};
  out.n1_coeff = -1.0 / (2.0 * std::sqrt(c));
  out.n3_coeff = 1.0 / (6.0 * std::sqrt(c));
  return out;
}

}  // namespace wglab
