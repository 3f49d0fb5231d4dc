#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isoholo/mathcore.hpp"
#include "isoholo/synth.hpp"
#include "isoholo/verify.hpp"

namespace isoholo {

inline constexpr const char* kSchemaVersion = "1";

struct OracleSummary {
  double deviation = 0.0;
  std::size_t steps = 0;
  std::vector<std::size_t> schedule;
  std::vector<double> deviations;
  /// Absent when the deviations sit at roundoff level.
  std::optional<double> convergence_order_estimate;
  bool anomalous = false;
};

struct VerificationSummary {
  double holonomy_error = 0.0;
  double closure_defect = 0.0;
  std::optional<OracleSummary> oracle;
};

/// Everything one synthesis run produced, in a canonical text form: JSON
/// with sorted keys, shortest round-trip decimals, complex entries as
/// [re, im] pairs and matrices as {"rows", "cols", "data"} in row-major order.
struct ControllerDocument {
  std::string schema_version = kSchemaVersion;
  std::string gate_name;
  ComplexMatrix gate;
  std::vector<double> phases;
  std::vector<int> windings;
  bool paper_order = false;
  std::vector<double> gammas;
  ComplexMatrix diagonalizer;
  ComplexMatrix omega_diag;
  ComplexMatrix w_diag;
  Index k = 0;
  Index n = 0;
  ComplexMatrix controller;
  double length = 0.0;
  VerificationSummary verification;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

OracleSummary summarize(const OracleReport& report);
nlohmann::json oracle_to_json(const OracleSummary& s);

ControllerDocument make_document(const std::string& gate_name, const SynthesisResult& result,
                                 bool paper_order, const VerificationSummary& verification);

std::string serialize(const ControllerDocument& doc);
ControllerDocument deserialize(std::string_view text);

/// Controller stored in a document; fails with InvalidController if the
/// matrix is not of extremal block form.
Controller document_controller(const ControllerDocument& doc, const Tolerances& tol = {});

/// Canonical dump used for every emitted artifact: 2-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

std::string read_text_file(const std::filesystem::path& path);
/// A matrix file holds one JSON matrix object, or {"matrix": {...}}.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace isoholo
