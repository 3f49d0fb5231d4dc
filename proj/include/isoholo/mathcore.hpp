#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "isoholo/config.hpp"
#include "isoholo/error.hpp"

namespace isoholo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

double frobenius(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// ‖A + A†‖_F
double skewness_defect(const ComplexMatrix& a);
/// ‖U†U − I‖_F, or +inf for non-square input.
double unitarity_defect(const ComplexMatrix& u);

/// Maps a phase into [0, 2π). Values within 1e-12 below 2π collapse to 0.
double wrap_phase(double phase);

/// Element of 𝔲(k): a finite square matrix with A† = −A up to tolerance.
class SkewHermitian {
 public:
  explicit SkewHermitian(ComplexMatrix m, const Tolerances& tol = {});

  static SkewHermitian zero(Index dim);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  struct Unchecked {};
  SkewHermitian(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Element of U(k): a finite square matrix with U†U = I up to tolerance.
class Unitary {
 public:
  explicit Unitary(ComplexMatrix m, const Tolerances& tol = {});

  static Unitary identity(Index dim);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

struct UnitaryEigen {
  /// Columns are orthonormal eigenvectors, in the order of `phases`.
  Unitary vectors;
  /// Eigenphases in [0, 2π), non-decreasing.
  std::vector<double> phases;
};

/// Spectral decomposition U = R diag(e^{iγ}) R†.
///
/// Phases are sorted ascending. Eigenvectors are canonicalized so the result
/// is a deterministic function of U: inside a cluster of phases closer than
/// 1e-9 the basis is obtained by pivoted Gram-Schmidt on the columns of the
/// cluster projector, and every column is rotated so that its largest entry
/// (lowest row on ties) is real and positive.
UnitaryEigen eig_unitary(const Unitary& u, const Tolerances& tol = {});

/// e^{tA} for a fixed skew-Hermitian A, evaluated through one Hermitian
/// eigendecomposition of −iA. Reuse an instance when sampling many t.
class SkewExponential {
 public:
  explicit SkewExponential(const SkewHermitian& a);

  ComplexMatrix at(double t) const;

 private:
  ComplexMatrix vectors_;
  Eigen::VectorXd frequencies_;
};

Unitary expm_skew(const SkewHermitian& a, double t, const Tolerances& tol = {});

/// Unitary factor Q of the polar decomposition M = QH.
Unitary polar_unitary(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace isoholo
