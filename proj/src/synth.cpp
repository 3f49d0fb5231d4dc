#include "isoholo/synth.hpp"

#include <cmath>
#include <string>

namespace isoholo {

double channel_length(double gamma, int winding) {
  if (winding < 1) throw Error(ErrorCode::ParamShapeMismatch, "winding must be >= 1");
  if (!(gamma >= 0.0 && gamma < kTwoPi))
    throw Error(ErrorCode::DimensionError, "eigenphase must lie in [0, 2π)");
  const double full = winding * kPi;
  const double s = full * full - (full - gamma) * (full - gamma);
  // pure roundoff at γ = 0
  return (s < 0.0 && s > -1e-14) ? 0.0 : s;
}

SmallCircle small_circle_params(double gamma, double phi, int winding) {
  const double s = channel_length(gamma, winding);
  return SmallCircle{2.0 * (winding * kPi - gamma), std::polar(std::sqrt(s), phi)};
}

SynthesisResult synthesize_with(const Unitary& gate, const UnitaryEigen& eig,
                                const SynthesisParams& params, const Tolerances& tol) {
  const Index k = gate.dim();
  const auto ks = static_cast<std::size_t>(k);
  if (eig.vectors.dim() != k || eig.phases.size() != ks)
    throw Error(ErrorCode::DimensionError, "diagonalization does not match the gate");
  if (!params.phases.empty() && params.phases.size() != ks)
    throw Error(ErrorCode::ParamShapeMismatch,
                "expected " + std::to_string(k) + " phases, got " +
                    std::to_string(params.phases.size()));
  if (!params.windings.empty() && params.windings.size() != ks)
    throw Error(ErrorCode::ParamShapeMismatch,
                "expected " + std::to_string(k) + " windings, got " +
                    std::to_string(params.windings.size()));
  for (int n : params.windings)
    if (n < 1) throw Error(ErrorCode::ParamShapeMismatch, "windings must be >= 1");

  std::vector<double> phases = params.phases.empty() ? std::vector<double>(ks, 0.0) : params.phases;
  std::vector<int> windings = params.windings.empty() ? std::vector<int>(ks, 1) : params.windings;

  const ComplexMatrix& r = eig.vectors.matrix();
  ComplexMatrix diag = ComplexMatrix::Zero(k, k);
  for (Index j = 0; j < k; ++j) diag(j, j) = std::polar(1.0, eig.phases[static_cast<std::size_t>(j)]);
  const double residual = (r.adjoint() * gate.matrix() * r - diag).norm();
  if (residual > tol.reconstruction)
    throw Error(ErrorCode::DimensionError,
                "R does not diagonalize the gate (residual " + std::to_string(residual) + ")");

  ComplexMatrix omega_diag = ComplexMatrix::Zero(k, k);
  ComplexMatrix w_diag = ComplexMatrix::Zero(k, k);
  double length = 0.0;
  for (std::size_t j = 0; j < ks; ++j) {
    const SmallCircle c = small_circle_params(eig.phases[j], phases[j], windings[j]);
    const auto jj = static_cast<Index>(j);
    omega_diag(jj, jj) = Complex(0.0, c.omega);
    w_diag(jj, jj) = Complex(0.0, 1.0) * c.tau;
    length += channel_length(eig.phases[j], windings[j]);
  }

  Controller controller(SkewHermitian(r * omega_diag * r.adjoint(), tol), r * w_diag);
  return SynthesisResult{gate,
                         eig.vectors,
                         eig.phases,
                         std::move(phases),
                         std::move(windings),
                         SkewHermitian(omega_diag, tol),
                         std::move(w_diag),
                         std::move(controller),
                         length};
}

SynthesisResult synthesize(const Unitary& gate, const SynthesisParams& params,
                           const Tolerances& tol) {
  return synthesize_with(gate, eig_unitary(gate, tol), params, tol);
}

}  // namespace isoholo
