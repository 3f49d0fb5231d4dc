#pragma once

namespace isoholo {

/// Numerical tolerances shared by every module. All norms are Frobenius.
struct Tolerances {
  double skewness = 1e-10;
  double unitarity = 1e-10;
  double frame = 1e-10;
  double projector = 1e-10;
  double reconstruction = 1e-10;
  /// Smallest admissible singular value for polar unitarization.
  double singularity = 1e-12;
  /// Largest admissible loop-closure defect before a curve counts as open.
  double closure = 1e-8;
};

}  // namespace isoholo
