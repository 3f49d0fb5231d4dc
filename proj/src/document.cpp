#include "isoholo/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace isoholo {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string("expected a number for ") + what);
  return j.get<double>();
}

template <typename T>
std::vector<T> number_list(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string("expected an array for ") + what);
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) parse_fail(std::string("expected numbers in ") + what);
    out.push_back(v.get<T>());
  }
  return out;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) data.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const json& rows_j = field(j, "rows");
  const json& cols_j = field(j, "cols");
  if (!rows_j.is_number_integer() || !cols_j.is_number_integer())
    parse_fail("matrix dimensions must be integers");
  const auto rows = rows_j.get<long long>();
  const auto cols = cols_j.get<long long>();
  if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096) parse_fail("matrix dimensions out of range");
  const json& data = field(j, "data");
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols)
    parse_fail("matrix data must hold rows×cols entries");
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) {
      const json& z = data[idx++];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        parse_fail("matrix entries must be [re, im] pairs");
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  if (!all_finite(m)) parse_fail("matrix has non-finite entries");
  return m;
}

OracleSummary summarize(const OracleReport& report) {
  OracleSummary s;
  s.deviation = report.deviation;
  s.steps = report.steps;
  s.schedule = report.schedule;
  s.deviations = report.deviations;
  if (std::isfinite(report.convergence_order_estimate))
    s.convergence_order_estimate = report.convergence_order_estimate;
  s.anomalous = report.anomalous;
  return s;
}

json oracle_to_json(const OracleSummary& s) {
  return json{{"deviation", s.deviation},
              {"steps", s.steps},
              {"schedule", s.schedule},
              {"deviations", s.deviations},
              {"convergence_order_estimate",
               s.convergence_order_estimate ? json(*s.convergence_order_estimate) : json(nullptr)},
              {"anomalous", s.anomalous}};
}

namespace {

OracleSummary oracle_from_json(const json& j) {
  OracleSummary s;
  s.deviation = number(field(j, "deviation"), "deviation");
  s.steps = field(j, "steps").get<std::size_t>();
  s.schedule = number_list<std::size_t>(field(j, "schedule"), "schedule");
  s.deviations = number_list<double>(field(j, "deviations"), "deviations");
  const json& slope = field(j, "convergence_order_estimate");
  if (!slope.is_null()) s.convergence_order_estimate = number(slope, "convergence_order_estimate");
  const json& anomalous = field(j, "anomalous");
  if (!anomalous.is_boolean()) parse_fail("anomalous must be a boolean");
  s.anomalous = anomalous.get<bool>();
  return s;
}

}  // namespace

ControllerDocument make_document(const std::string& gate_name, const SynthesisResult& result,
                                 bool paper_order, const VerificationSummary& verification) {
  ControllerDocument doc;
  doc.gate_name = gate_name;
  doc.gate = result.gate.matrix();
  doc.phases = result.phases;
  doc.windings = result.windings;
  doc.paper_order = paper_order;
  doc.gammas = result.gammas;
  doc.diagonalizer = result.diagonalizer.matrix();
  doc.omega_diag = result.omega_diag.matrix();
  doc.w_diag = result.w_diag;
  doc.k = result.controller.k();
  doc.n = result.controller.n();
  doc.controller = result.controller.matrix().matrix();
  doc.length = result.length;
  doc.verification = verification;
  return doc;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string serialize(const ControllerDocument& doc) {
  json verification{{"holonomy_error", doc.verification.holonomy_error},
                    {"closure_defect", doc.verification.closure_defect},
                    {"oracle", doc.verification.oracle ? oracle_to_json(*doc.verification.oracle)
                                                       : json(nullptr)}};
  json j{{"schema_version", doc.schema_version},
         {"gate", {{"name", doc.gate_name}, {"matrix", matrix_to_json(doc.gate)}}},
         {"params", {{"phases", doc.phases}, {"windings", doc.windings}, {"paper_order", doc.paper_order}}},
         {"gammas", doc.gammas},
         {"diagonalizer", matrix_to_json(doc.diagonalizer)},
         {"omega_diag", matrix_to_json(doc.omega_diag)},
         {"w_diag", matrix_to_json(doc.w_diag)},
         {"k", doc.k},
         {"n", doc.n},
         {"controller", matrix_to_json(doc.controller)},
         {"length", doc.length},
         {"verification", std::move(verification)}};
  return canonical_dump(j);
}

ControllerDocument deserialize(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    ControllerDocument doc;
    const json& version = field(j, "schema_version");
    if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
      parse_fail("unsupported schema_version");
    doc.schema_version = version.get<std::string>();
    const json& gate = field(j, "gate");
    doc.gate_name = field(gate, "name").get<std::string>();
    doc.gate = matrix_from_json(field(gate, "matrix"));
    const json& params = field(j, "params");
    doc.phases = number_list<double>(field(params, "phases"), "phases");
    doc.windings = number_list<int>(field(params, "windings"), "windings");
    doc.paper_order = field(params, "paper_order").get<bool>();
    doc.gammas = number_list<double>(field(j, "gammas"), "gammas");
    doc.diagonalizer = matrix_from_json(field(j, "diagonalizer"));
    doc.omega_diag = matrix_from_json(field(j, "omega_diag"));
    doc.w_diag = matrix_from_json(field(j, "w_diag"));
    doc.k = field(j, "k").get<Index>();
    doc.n = field(j, "n").get<Index>();
    doc.controller = matrix_from_json(field(j, "controller"));
    if (doc.controller.rows() != doc.n || doc.controller.cols() != doc.n || doc.k < 1 || doc.k >= doc.n)
      parse_fail("controller shape does not match k and n");
    doc.length = number(field(j, "length"), "length");
    const json& ver = field(j, "verification");
    doc.verification.holonomy_error = number(field(ver, "holonomy_error"), "holonomy_error");
    doc.verification.closure_defect = number(field(ver, "closure_defect"), "closure_defect");
    const json& oracle = field(ver, "oracle");
    if (!oracle.is_null()) doc.verification.oracle = oracle_from_json(oracle);
    return doc;
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed document: ") + e.what());
  }
}

Controller document_controller(const ControllerDocument& doc, const Tolerances& tol) {
  return Controller::from_matrix(doc.controller, doc.k, tol);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    parse_fail("invalid JSON in " + path.string() + ": " + e.what());
  }
  if (j.is_object() && j.contains("matrix")) return matrix_from_json(j.at("matrix"));
  return matrix_from_json(j);
}

}  // namespace isoholo
