#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "isoholo/bundle.hpp"
#include "isoholo/extremal.hpp"

namespace isoholo {

/// A closed loop on the Grassmannian sampled on a uniform grid of [0, 1].
class SampledLoop {
 public:
  /// Fails with OpenLoop if the first and last projectors differ by more
  /// than the closure tolerance.
  SampledLoop(std::vector<double> times, std::vector<GrassmannProjector> projectors,
              const Tolerances& tol = {});

  const std::vector<double>& times() const { return times_; }
  const std::vector<GrassmannProjector>& projectors() const { return projectors_; }
  std::size_t steps() const { return projectors_.size() - 1; }
  Index n() const { return projectors_.front().n(); }
  Index k() const { return projectors_.front().k(); }

 private:
  std::vector<double> times_;
  std::vector<GrassmannProjector> projectors_;
};

struct OracleReport {
  Unitary gamma_numeric;
  Unitary gamma_analytic;
  /// ‖gamma_numeric − gamma_analytic‖_F on the finest grid.
  double deviation = 0.0;
  std::size_t steps = 0;
  /// Least-squares slope of log(deviation) against log(steps); NaN when the
  /// deviations are all at roundoff level and no slope can be measured.
  double convergence_order_estimate = 0.0;
  /// Slope estimable but outside [−1.5, −0.5].
  bool anomalous = false;
  std::vector<std::size_t> schedule;
  std::vector<double> deviations;
};

/// Deviations below this are treated as roundoff when estimating the
/// convergence order.
inline constexpr double kRoundoffFloor = 1e-10;

/// P(i/steps) = π(V(i/steps)) for i = 0..steps.
SampledLoop sample_loop(const Controller& x, std::size_t steps, const Tolerances& tol = {});

/// Same loop traversed with a reparametrized clock: sample i sits at
/// P(warp(i/steps)). `warp` must map [0, 1] monotonically onto [0, 1].
SampledLoop sample_loop_warped(const Controller& x, std::size_t steps,
                               const std::function<double(double)>& warp,
                               const Tolerances& tol = {});

/// Holonomy of the canonical connection from projectors alone:
///
///     K = V₀† P(t_{M−1}) ⋯ P(t₁) V₀,   Γ ≈ polar(K).
///
/// The loop must start at the standard base point P₀ = V₀V₀†.
Unitary numeric_holonomy(const SampledLoop& loop, const Tolerances& tol = {});

OracleReport cross_validate(const Controller& x, const Unitary& gate,
                            const std::vector<std::size_t>& schedule,
                            const Tolerances& tol = {});

/// Re-runs the transport with a random frame in every fiber (a random gauge
/// per sample and per trial) and returns the largest deviation from
/// numeric_holonomy. Only projectors enter the chain, so the answer must not
/// depend on the frames.
double gauge_invariance_check(const SampledLoop& loop, int trials, std::uint64_t seed,
                              const Tolerances& tol = {});

}  // namespace isoholo
