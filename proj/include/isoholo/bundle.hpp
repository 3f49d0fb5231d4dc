#pragma once

#include <span>

#include "isoholo/mathcore.hpp"

namespace isoholo {

/// Point of the Stiefel manifold S_{n,k}: an n×k matrix with V†V = I_k.
class StiefelFrame {
 public:
  explicit StiefelFrame(ComplexMatrix v, const Tolerances& tol = {});

  Index n() const { return v_.rows(); }
  Index k() const { return v_.cols(); }
  const ComplexMatrix& matrix() const { return v_; }

 private:
  ComplexMatrix v_;
};

/// Point of the Grassmannian G_{n,k}: an orthogonal projector of rank k.
class GrassmannProjector {
 public:
  explicit GrassmannProjector(ComplexMatrix p, const Tolerances& tol = {});

  Index n() const { return p_.rows(); }
  Index k() const { return k_; }
  const ComplexMatrix& matrix() const { return p_; }

 private:
  ComplexMatrix p_;
  Index k_;
};

/// Value of the canonical connection A = V†dV along one tangent vector.
struct ConnectionSample {
  SkewHermitian value;
  /// ‖(A + A†)/2‖_F, the part removed by skew-symmetrization.
  double hermitian_part = 0.0;
  /// Set when hermitian_part exceeds 100× the skewness tolerance.
  bool hermitian_part_flagged = false;
};

/// V₀ = (I_k; 0).
StiefelFrame standard_base_frame(Index n, Index k);

/// π(V) = VV†.
GrassmannProjector project(const StiefelFrame& v, const Tolerances& tol = {});

ConnectionSample connection_sample(const StiefelFrame& v, const ComplexMatrix& vdot,
                                   const Tolerances& tol = {});

/// Largest ‖V†·dV/dt‖_F over the interior samples of a uniformly sampled
/// curve, with dV/dt from central differences. Zero up to O(dt²) for a
/// horizontal curve.
double horizontality_defect(std::span<const StiefelFrame> curve, double dt);

/// ∫ ½ tr(dP/dt · dP/dt) dt over a uniformly sampled projector curve.
///
/// Derivatives are second-order finite differences (central inside, one-sided
/// at the ends); the integral is composite Simpson for an odd sample count
/// and trapezoid otherwise.
double loop_length_numeric(std::span<const GrassmannProjector> curve, double dt);

}  // namespace isoholo
