#pragma once

#include <random>

#include "isoholo/mathcore.hpp"

namespace isoholo {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Haar-distributed element of U(dim): QR of a complex Ginibre matrix with
/// the phases of R's diagonal moved into Q.
Unitary haar_unitary(Index dim, Rng& rng);

/// Random element of 𝔲(dim) with entries of order `scale`.
SkewHermitian random_skew(Index dim, double scale, Rng& rng);

}  // namespace isoholo
