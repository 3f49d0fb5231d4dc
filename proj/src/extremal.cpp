#include "isoholo/extremal.hpp"

#include <string>

namespace isoholo {

namespace {

ComplexMatrix assemble(const ComplexMatrix& omega, const ComplexMatrix& w) {
  const Index k = omega.rows();
  const Index n = k + w.cols();
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  x.topLeftCorner(k, k) = omega;
  x.topRightCorner(k, n - k) = w;
  x.bottomLeftCorner(n - k, k) = -w.adjoint();
  return x;
}

}  // namespace

Controller::Controller(SkewHermitian omega, ComplexMatrix w)
    : omega_(ComplexMatrix(0.5 * (omega.matrix() - omega.matrix().adjoint()))),
      w_(std::move(w)),
      x_(SkewHermitian::zero(1)) {
  if (w_.rows() != omega_.dim() || w_.cols() < 1)
    throw Error(ErrorCode::DimensionError, "W must be k×(n−k) with n > k");
  if (!all_finite(w_)) throw Error(ErrorCode::InvalidController, "non-finite entry in W");
  // Ω was replaced by (Ω − Ω†)/2, which is exactly skew in floating point, so
  // X is too and V₀†XV₀ reproduces the stored Ω bit for bit.
  x_ = SkewHermitian(assemble(omega_.matrix(), w_));
}

Controller Controller::from_matrix(const ComplexMatrix& x, Index k, const Tolerances& tol) {
  const Index n = x.rows();
  if (x.cols() != n || k < 1 || k >= n)
    throw Error(ErrorCode::DimensionError, "controller must be n×n with 0 < k < n");
  SkewHermitian whole(x, tol);
  const double z = x.bottomRightCorner(n - k, n - k).norm();
  if (z > tol.skewness)
    throw Error(ErrorCode::InvalidController, "lower-right block has norm " + std::to_string(z));
  const double mismatch =
      (x.bottomLeftCorner(n - k, k) + x.topRightCorner(k, n - k).adjoint()).norm();
  if (mismatch > tol.skewness)
    throw Error(ErrorCode::InvalidController, "off-diagonal blocks are not −W† / W");
  return Controller(SkewHermitian(x.topLeftCorner(k, k), tol), x.topRightCorner(k, n - k));
}

ExtremalCurve::ExtremalCurve(const Controller& x)
    : n_(x.n()), k_(x.k()), x_exp_(x.matrix()), omega_exp_(x.omega()) {}

ComplexMatrix ExtremalCurve::frame_at(double t) const {
  return x_exp_.at(t).leftCols(k_) * omega_exp_.at(-t);
}

ComplexMatrix ExtremalCurve::projector_at(double t) const {
  const ComplexMatrix e = x_exp_.at(t).leftCols(k_);
  return e * e.adjoint();
}

StiefelFrame curve_point(const Controller& x, double t, const Tolerances& tol) {
  return StiefelFrame(ExtremalCurve(x).frame_at(t), tol);
}

namespace {

double closure_defect_of(const ComplexMatrix& e, Index k) {
  const Index n = e.rows();
  ComplexMatrix p0 = ComplexMatrix::Zero(n, n);
  p0.topLeftCorner(k, k).setIdentity();
  const ComplexMatrix left = e.leftCols(k);
  return (left * left.adjoint() - p0).norm();
}

}  // namespace

double loop_closure_defect(const Controller& x, double period) {
  return closure_defect_of(SkewExponential(x.matrix()).at(period), x.k());
}

Unitary holonomy_analytic(const Controller& x, double period, const Tolerances& tol) {
  const ComplexMatrix e = SkewExponential(x.matrix()).at(period);
  const double defect = closure_defect_of(e, x.k());
  if (defect > tol.closure)
    throw Error(ErrorCode::OpenLoop, "loop-closure defect " + std::to_string(defect));
  const ComplexMatrix gamma =
      e.topLeftCorner(x.k(), x.k()) * SkewExponential(x.omega()).at(-period);
  try {
    return Unitary(gamma, tol);
  } catch (const Error& err) {
    throw Error(ErrorCode::NonUnitaryHolonomy, err.what());
  }
}

double length_analytic(const Controller& x, double period) {
  if (!(period > 0.0)) throw Error(ErrorCode::DimensionError, "period must be positive");
  return x.w().squaredNorm() * period;
}

Controller transform_controller(const Controller& x, const Unitary& h1, const Unitary& h2) {
  if (h1.dim() != x.k() || h2.dim() != x.n() - x.k())
    throw Error(ErrorCode::DimensionError, "h1 must be k×k and h2 (n−k)×(n−k)");
  const ComplexMatrix& a = h1.matrix();
  return Controller(SkewHermitian(a * x.omega().matrix() * a.adjoint()),
                    a * x.w() * h2.matrix().adjoint());
}

double gate_commutes(const Unitary& h, const Unitary& gate) {
  if (h.dim() != gate.dim()) throw Error(ErrorCode::DimensionError, "shape mismatch");
  return (h.matrix() * gate.matrix() * h.matrix().adjoint() - gate.matrix()).norm();
}

HolonomyReport holonomy_report(const Controller& x, const Unitary& target,
                               const Tolerances& tol) {
  if (target.dim() != x.k()) throw Error(ErrorCode::DimensionError, "target must be k×k");
  Unitary gamma = holonomy_analytic(x, 1.0, tol);
  const double err = (gamma.matrix() - target.matrix()).norm();
  return HolonomyReport{std::move(gamma), target, err, loop_closure_defect(x, 1.0),
                        length_analytic(x, 1.0)};
}

}  // namespace isoholo
