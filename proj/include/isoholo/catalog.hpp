#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoholo/mathcore.hpp"

namespace isoholo {

/// Channel arrangement that reproduces a published controller listing
/// verbatim. Starting from the canonical (ascending) diagonalization, output
/// channel j is input channel permutation[j] (1-based), and its eigenvector
/// is then multiplied by e^{i·column_phases[j]}.
struct PaperOrder {
  std::vector<int> permutation;
  std::vector<double> column_phases;
};

struct GateCatalogEntry {
  std::string name;
  Index k = 0;
  Unitary matrix;
  std::optional<PaperOrder> paper_order;
};

/// Looks up a gate by name. Fixed names:
///
///   hadamard, pauli-x, pauli-y, pauli-z, s, t, cnot, cz, swap, dft2
///
/// Parametrized names:
///
///   identity-<k>     k×k identity
///   phase(<angle>)   diag(1, e^{i·angle})
///   berry(<angle>)   the 1×1 gate e^{i·angle}
///   random-<k>       Haar-random k×k unitary drawn from `seed`
///
/// Angles are decimals or multiples of pi: "0.5", "pi", "pi/4", "3pi/2".
/// Throws UnknownGate otherwise.
GateCatalogEntry catalog_get(const std::string& name, std::uint64_t seed = 0);

/// Names for `catalog list`, parametrized ones shown as templates.
std::vector<std::string> catalog_names();

/// Concrete gates exercised by the acceptance suite: every fixed name plus
/// identity-1 and identity-2.
std::vector<std::string> catalog_fixed_names();

/// Validates a published channel order against k and applies it to a diagonalization.
UnitaryEigen apply_paper_order(const UnitaryEigen& eig, const PaperOrder& order);

/// Parses an angle in the syntax accepted by catalog_get.
double parse_angle(const std::string& text);

}  // namespace isoholo
