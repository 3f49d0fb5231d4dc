#pragma once

#include "isoholo/bundle.hpp"
#include "isoholo/mathcore.hpp"

namespace isoholo {

/// Generator of a horizontal extremal curve,
///
///     X = [[Ω, W], [−W†, 0]] ∈ 𝔲(n),
///
/// with Ω ∈ 𝔲(k) and W ∈ M(k, n−k). The lower-right block is always zero;
/// controllers with a nonzero block there do not describe extremal curves
/// through the standard base frame.
class Controller {
 public:
  Controller(SkewHermitian omega, ComplexMatrix w);

  /// Splits an assembled n×n matrix; fails with InvalidController when the
  /// lower-right block is not zero within the skewness tolerance.
  static Controller from_matrix(const ComplexMatrix& x, Index k, const Tolerances& tol = {});

  Index k() const { return omega_.dim(); }
  Index n() const { return omega_.dim() + w_.cols(); }
  const SkewHermitian& omega() const { return omega_; }
  const ComplexMatrix& w() const { return w_; }

  /// The assembled n×n matrix X.
  const SkewHermitian& matrix() const { return x_; }

 private:
  SkewHermitian omega_;
  ComplexMatrix w_;
  SkewHermitian x_;
};

/// V(t) = e^{tX} V₀ e^{−tΩ} with both exponentials diagonalized once.
class ExtremalCurve {
 public:
  explicit ExtremalCurve(const Controller& x);

  ComplexMatrix frame_at(double t) const;
  /// P(t) = e^{tX} P₀ e^{−tX}
  ComplexMatrix projector_at(double t) const;

  Index n() const { return n_; }
  Index k() const { return k_; }

 private:
  Index n_;
  Index k_;
  SkewExponential x_exp_;
  SkewExponential omega_exp_;
};

struct HolonomyReport {
  Unitary gamma_matrix;
  Unitary target;
  double holonomy_error = 0.0;
  double loop_defect = 0.0;
  double length_analytic = 0.0;
};

StiefelFrame curve_point(const Controller& x, double t, const Tolerances& tol = {});

/// ‖e^{TX} P₀ e^{−TX} − P₀‖_F
double loop_closure_defect(const Controller& x, double period = 1.0);

/// Γ = V₀† e^{TX} V₀ e^{−TΩ}. Refuses open loops (OpenLoop) instead of
/// unitarizing a non-unitary product.
Unitary holonomy_analytic(const Controller& x, double period = 1.0, const Tolerances& tol = {});

/// tr(W†W)·T
double length_analytic(const Controller& x, double period = 1.0);

/// X′ with Ω′ = h₁Ωh₁† and W′ = h₁Wh₂†.
Controller transform_controller(const Controller& x, const Unitary& h1, const Unitary& h2);

/// ‖h·G·h† − G‖_F
double gate_commutes(const Unitary& h, const Unitary& gate);

HolonomyReport holonomy_report(const Controller& x, const Unitary& target,
                               const Tolerances& tol = {});

}  // namespace isoholo
