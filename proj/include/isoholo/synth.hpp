#pragma once

#include <vector>

#include "isoholo/extremal.hpp"
#include "isoholo/mathcore.hpp"

namespace isoholo {

/// Free parameters of the construction, one entry per eigen-channel. Empty
/// vectors mean the defaults: every phase 0 and every winding 1.
struct SynthesisParams {
  std::vector<double> phases;
  std::vector<int> windings;
};

struct SynthesisResult {
  Unitary gate;
  Unitary diagonalizer;
  std::vector<double> gammas;
  std::vector<double> phases;
  std::vector<int> windings;
  SkewHermitian omega_diag;
  ComplexMatrix w_diag;
  Controller controller;
  double length = 0.0;
};

struct SmallCircle {
  /// Ω entry is iω.
  double omega = 0.0;
  /// W entry is iτ.
  Complex tau;
};

/// One U(1) channel: ω = 2(nπ − γ), τ = e^{iφ}·√((nπ)² − (nπ − γ)²).
SmallCircle small_circle_params(double gamma, double phi, int winding);

/// (nπ)² − (nπ − γ)²: the length of a channel's loop.
double channel_length(double gamma, int winding);

/// Builds the 2k×2k controller whose loop has holonomy `gate`.
///
/// The gate is diagonalized as R†UR = diag(e^{iγ_j}); each eigen-channel gets
/// a small-circle loop and the diagonal controller is rotated back by R:
///
///     X = [[R Ω_diag R†, R W_diag], [−W_diag† R†, 0]].
SynthesisResult synthesize(const Unitary& gate, const SynthesisParams& params = {},
                           const Tolerances& tol = {});

/// Same construction for a caller-supplied diagonalization. Any R with
/// R†UR = diag(e^{iγ}) gives a controller for the same gate; this is how a
/// specific channel order or eigenvector phase convention is reproduced.
SynthesisResult synthesize_with(const Unitary& gate, const UnitaryEigen& eig,
                                const SynthesisParams& params = {}, const Tolerances& tol = {});

}  // namespace isoholo
