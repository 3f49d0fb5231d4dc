#include "isoholo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/QR>

#include "isoholo/random.hpp"

namespace isoholo {

SampledLoop::SampledLoop(std::vector<double> times, std::vector<GrassmannProjector> projectors,
                         const Tolerances& tol)
    : times_(std::move(times)), projectors_(std::move(projectors)) {
  if (projectors_.size() < 3 || times_.size() != projectors_.size())
    throw Error(ErrorCode::TooFewSamples, "a sampled loop needs matching times and >= 3 samples");
  const double gap = (projectors_.back().matrix() - projectors_.front().matrix()).norm();
  if (gap > tol.closure)
    throw Error(ErrorCode::OpenLoop, "endpoints differ by " + std::to_string(gap));
}

SampledLoop sample_loop_warped(const Controller& x, std::size_t steps,
                               const std::function<double(double)>& warp,
                               const Tolerances& tol) {
  if (steps < 2) throw Error(ErrorCode::TooFewSamples, "steps must be >= 2");
  const double defect = loop_closure_defect(x, 1.0);
  if (defect > tol.closure)
    throw Error(ErrorCode::OpenLoop, "loop-closure defect " + std::to_string(defect));

  const ExtremalCurve curve(x);
  std::vector<double> times(steps + 1);
  std::vector<GrassmannProjector> projectors;
  projectors.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    times[i] = static_cast<double>(i) / static_cast<double>(steps);
    projectors.emplace_back(curve.projector_at(warp(times[i])), tol);
  }
  return SampledLoop(std::move(times), std::move(projectors), tol);
}

SampledLoop sample_loop(const Controller& x, std::size_t steps, const Tolerances& tol) {
  return sample_loop_warped(x, steps, [](double t) { return t; }, tol);
}

namespace {

void require_base_point(const SampledLoop& loop, const ComplexMatrix& v0, const Tolerances& tol) {
  const double gap = (loop.projectors().front().matrix() - v0 * v0.adjoint()).norm();
  if (gap > tol.closure)
    throw Error(ErrorCode::InvalidFrame, "loop does not start at the standard base point");
}

}  // namespace

Unitary numeric_holonomy(const SampledLoop& loop, const Tolerances& tol) {
  const ComplexMatrix v0 = standard_base_frame(loop.n(), loop.k()).matrix();
  require_base_point(loop, v0, tol);
  const auto& ps = loop.projectors();
  ComplexMatrix y = v0;
  for (std::size_t i = 1; i + 1 < ps.size(); ++i) y = ps[i].matrix() * y;
  return polar_unitary(v0.adjoint() * y, tol);
}

OracleReport cross_validate(const Controller& x, const Unitary& gate,
                            const std::vector<std::size_t>& schedule, const Tolerances& tol) {
  if (schedule.empty()) throw Error(ErrorCode::TooFewSamples, "empty step schedule");
  if (gate.dim() != x.k()) throw Error(ErrorCode::DimensionError, "gate must be k×k");
  Unitary analytic = holonomy_analytic(x, 1.0, tol);

  std::vector<double> deviations;
  Unitary finest = Unitary::identity(x.k());
  for (std::size_t steps : schedule) {
    finest = numeric_holonomy(sample_loop(x, steps, tol), tol);
    deviations.push_back((finest.matrix() - analytic.matrix()).norm());
  }

  // least-squares slope over the points above the roundoff floor
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (deviations[i] <= kRoundoffFloor) continue;
    const double lx = std::log(static_cast<double>(schedule[i]));
    const double ly = std::log(deviations[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  double slope = std::numeric_limits<double>::quiet_NaN();
  if (count >= 2) {
    const double denom = count * sxx - sx * sx;
    if (denom > 0.0) slope = (count * sxy - sx * sy) / denom;
  }
  const bool anomalous = std::isfinite(slope) && (slope < -1.5 || slope > -0.5);

  const double deviation = deviations.back();
  return OracleReport{std::move(finest), std::move(analytic), deviation, schedule.back(), slope,
                      anomalous,         schedule,            std::move(deviations)};
}

double gauge_invariance_check(const SampledLoop& loop, int trials, std::uint64_t seed,
                              const Tolerances& tol) {
  const Unitary reference = numeric_holonomy(loop, tol);
  const Index n = loop.n();
  const Index k = loop.k();
  const ComplexMatrix v0 = standard_base_frame(n, k).matrix();
  const auto& ps = loop.projectors();
  const std::size_t last = ps.size() - 1;

  Rng rng(seed);
  auto random_frame = [&](const ComplexMatrix& p) {
    Eigen::HouseholderQR<ComplexMatrix> qr(p * gaussian_matrix(n, k, rng));
    return ComplexMatrix(qr.householderQ() * ComplexMatrix::Identity(n, k));
  };

  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const ComplexMatrix f0 = random_frame(ps.front().matrix());
    // transport in frame components: overlaps F_i†F_{i−1}
    ComplexMatrix prev = f0;
    ComplexMatrix z = ComplexMatrix::Identity(k, k);
    for (std::size_t i = 1; i < last; ++i) {
      ComplexMatrix fi = random_frame(ps[i].matrix());
      z = (fi.adjoint() * prev) * z;
      prev = std::move(fi);
    }
    z = (f0.adjoint() * prev) * z;
    const Unitary gauged = polar_unitary(z, tol);
    // undo the base-frame gauge h₀ = V₀†F₀
    const ComplexMatrix h0 = v0.adjoint() * f0;
    const ComplexMatrix back = h0 * gauged.matrix() * h0.adjoint();
    worst = std::max(worst, (back - reference.matrix()).norm());
  }
  return worst;
}

}  // namespace isoholo
