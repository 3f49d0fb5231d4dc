#include "isoholo/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace isoholo {

StiefelFrame::StiefelFrame(ComplexMatrix v, const Tolerances& tol) : v_(std::move(v)) {
  if (v_.cols() == 0 || v_.cols() >= v_.rows())
    throw Error(ErrorCode::DimensionError, "Stiefel frame needs 0 < k < n");
  if (!all_finite(v_)) throw Error(ErrorCode::InvalidFrame, "non-finite entry");
  const double defect =
      (v_.adjoint() * v_ - ComplexMatrix::Identity(v_.cols(), v_.cols())).norm();
  if (defect > tol.frame)
    throw Error(ErrorCode::InvalidFrame, "‖V†V − I‖ = " + std::to_string(defect));
}

GrassmannProjector::GrassmannProjector(ComplexMatrix p, const Tolerances& tol)
    : p_(std::move(p)), k_(0) {
  if (p_.rows() == 0 || p_.rows() != p_.cols())
    throw Error(ErrorCode::DimensionError, "projector must be square and non-empty");
  if (!all_finite(p_)) throw Error(ErrorCode::InvalidProjector, "non-finite entry");
  const double idempotency = (p_ * p_ - p_).norm();
  const double hermiticity = (p_.adjoint() - p_).norm();
  const double trace = p_.trace().real();
  const double rank = std::round(trace);
  if (idempotency > tol.projector || hermiticity > tol.projector ||
      std::abs(trace - rank) > tol.projector || rank < 1.0)
    throw Error(ErrorCode::InvalidProjector,
                "‖P² − P‖ = " + std::to_string(idempotency) +
                    ", ‖P† − P‖ = " + std::to_string(hermiticity) +
                    ", tr P = " + std::to_string(trace));
  k_ = static_cast<Index>(rank);
}

StiefelFrame standard_base_frame(Index n, Index k) {
  if (k < 1 || k >= n) throw Error(ErrorCode::DimensionError, "base frame needs 0 < k < n");
  ComplexMatrix v = ComplexMatrix::Zero(n, k);
  v.topRows(k).setIdentity();
  return StiefelFrame(std::move(v));
}

GrassmannProjector project(const StiefelFrame& v, const Tolerances& tol) {
  return GrassmannProjector(v.matrix() * v.matrix().adjoint(), tol);
}

ConnectionSample connection_sample(const StiefelFrame& v, const ComplexMatrix& vdot,
                                   const Tolerances& tol) {
  if (vdot.rows() != v.n() || vdot.cols() != v.k())
    throw Error(ErrorCode::DimensionError, "tangent vector shape does not match frame");
  const ComplexMatrix a = v.matrix().adjoint() * vdot;
  const ComplexMatrix skew = 0.5 * (a - a.adjoint());
  const double herm = (0.5 * (a + a.adjoint())).norm();
  return ConnectionSample{SkewHermitian(skew, tol), herm, herm > 100.0 * tol.skewness};
}

double horizontality_defect(std::span<const StiefelFrame> curve, double dt) {
  if (curve.size() < 3) throw Error(ErrorCode::TooFewSamples, "need at least 3 samples");
  if (!(dt > 0.0)) throw Error(ErrorCode::DimensionError, "time step must be positive");
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    const ComplexMatrix vdot = (curve[i + 1].matrix() - curve[i - 1].matrix()) / (2.0 * dt);
    worst = std::max(worst, (curve[i].matrix().adjoint() * vdot).norm());
  }
  return worst;
}

double loop_length_numeric(std::span<const GrassmannProjector> curve, double dt) {
  const std::size_t m = curve.size();
  if (m < 3) throw Error(ErrorCode::TooFewSamples, "need at least 3 samples");
  if (!(dt > 0.0)) throw Error(ErrorCode::DimensionError, "time step must be positive");

  auto p = [&](std::size_t i) -> const ComplexMatrix& { return curve[i].matrix(); };
  std::vector<double> speed2(m);
  for (std::size_t i = 0; i < m; ++i) {
    ComplexMatrix pdot;
    if (i == 0)
      pdot = (-3.0 * p(0) + 4.0 * p(1) - p(2)) / (2.0 * dt);
    else if (i == m - 1)
      pdot = (3.0 * p(m - 1) - 4.0 * p(m - 2) + p(m - 3)) / (2.0 * dt);
    else
      pdot = (p(i + 1) - p(i - 1)) / (2.0 * dt);
    // Ṗ is Hermitian, so tr(Ṗ²) = ‖Ṗ‖_F².
    speed2[i] = 0.5 * pdot.squaredNorm();
  }

  double sum = 0.0;
  if (m % 2 == 1) {
    sum = speed2.front() + speed2.back();
    for (std::size_t i = 1; i + 1 < m; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * speed2[i];
    return sum * dt / 3.0;
  }
  sum = 0.5 * (speed2.front() + speed2.back());
  for (std::size_t i = 1; i + 1 < m; ++i) sum += speed2[i];
  return sum * dt;
}

}  // namespace isoholo
