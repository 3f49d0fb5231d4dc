#include "isoholo/abelian.hpp"

#include <cmath>
#include <string>

#include "isoholo/synth.hpp"

namespace isoholo {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

constexpr Vec3 kNorthPole{0.0, 0.0, 1.0};

}  // namespace

double BerryController::rho() const { return std::sqrt(dot(w_, w_)); }

Vec3 BerryController::axis() const {
  const double r = rho();
  if (r == 0.0) return kNorthPole;
  return {w_[0] / r, w_[1] / r, w_[2] / r};
}

Controller BerryController::to_controller() const {
  const Complex i(0.0, 1.0);
  ComplexMatrix omega(1, 1);
  omega(0, 0) = 2.0 * i * w_[2];
  ComplexMatrix w(1, 1);
  w(0, 0) = i * w_[0] + w_[1];
  return Controller(SkewHermitian(std::move(omega)), std::move(w));
}

BerryController berry_controller(double gamma, double phi, int winding) {
  const SmallCircle c = small_circle_params(gamma, phi, winding);
  // w₁ + iw₂ = conj(τ)
  return BerryController(Vec3{c.tau.real(), -c.tau.imag(), 0.5 * c.omega});
}

BlochPoint bloch_curve(const BerryController& c, double t) {
  const Vec3 n = c.axis();
  const double along = dot(n, kNorthPole);
  const Vec3 side = cross(n, kNorthPole);
  const double angle = 2.0 * c.rho() * t;
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  BlochPoint p{};
  for (int i = 0; i < 3; ++i)
    p.r[i] = n[i] * along + (kNorthPole[i] - n[i] * along) * cs - side[i] * sn;
  return p;
}

BlochPoint bloch_point(const ComplexMatrix& projector) {
  if (projector.rows() != 2 || projector.cols() != 2)
    throw Error(ErrorCode::DimensionError, "Bloch vector needs a 2×2 projector");
  // P₀₁ = (r₁ − i r₂)/2
  return BlochPoint{{2.0 * projector(0, 1).real(), -2.0 * projector(0, 1).imag(),
                     (projector(0, 0) - projector(1, 1)).real()}};
}

Complex berry_holonomy(const BerryController& c) {
  const double turns = c.rho() / kPi;
  const double winding = std::round(turns);
  if (winding < 1.0 || std::abs(turns - winding) > 1e-8)
    throw Error(ErrorCode::OpenLoop, "‖w‖/π = " + std::to_string(turns) + " is not a positive integer");
  return std::polar(1.0, -(c.w()[2] - winding * kPi));
}

}  // namespace isoholo
