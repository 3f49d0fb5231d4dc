#pragma once

#include <array>

#include "isoholo/extremal.hpp"

namespace isoholo {

using Vec3 = std::array<double, 3>;

/// U(1) controller on the Hopf bundle S³ → S², parametrized by a real
/// 3-vector w:
///
///     X = i(w₃ I + w₁σ₁ + w₂σ₂ + w₃σ₃) = [[2iw₃, iw₁ + w₂], [iw₁ − w₂, 0]].
///
/// Note the phase convention: w₁ + iw₂ = e^{−iφ}·r corresponds to the W entry
/// iτ with τ = e^{+iφ}·r, so a BerryController built for (γ, φ, n) assembles
/// to exactly the k = 1 controller that synthesize() emits for the same φ.
class BerryController {
 public:
  explicit BerryController(Vec3 w) : w_(w) {}

  const Vec3& w() const { return w_; }
  /// ρ = ‖w‖
  double rho() const;
  /// Unit vector along w; e₃ when w = 0.
  Vec3 axis() const;

  Controller to_controller() const;

 private:
  Vec3 w_;
};

struct BlochPoint {
  Vec3 r;
};

/// Small-circle controller for the phase e^{iγ}: w₃ = nπ − γ and
/// w₁ + iw₂ = e^{−iφ}·√((nπ)² − (nπ − γ)²).
BerryController berry_controller(double gamma, double phi, int winding);

/// Point of the projected loop. It starts at the north pole e₃ and runs
/// around the small circle with axis n̂ by the angle 2ρt.
BlochPoint bloch_curve(const BerryController& c, double t);

/// Bloch vector of a 2×2 rank-one projector, P = ½(I + r·σ).
BlochPoint bloch_point(const ComplexMatrix& projector);

/// e^{−i(w₃ − nπ)}; OpenLoop unless ‖w‖/π is within 1e-8 of a positive integer.
Complex berry_holonomy(const BerryController& c);

}  // namespace isoholo
