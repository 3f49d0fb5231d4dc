#include "isoholo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "isoholo/abelian.hpp"
#include "isoholo/catalog.hpp"
#include "isoholo/document.hpp"
#include "isoholo/synth.hpp"
#include "isoholo/verify.hpp"

namespace isoholo::cli {

using nlohmann::json;

namespace {

const std::vector<std::size_t> kDefaultSchedule{1000, 10000, 100000};

struct Options {
  std::string gate;
  std::string matrix;
  std::string doc;
  std::string phases;
  std::string windings;
  std::string steps;
  std::string out;
  std::string config;
  std::string catalog_name;
  bool paper_order = false;
  bool oracle = false;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  double bound = 2e-3;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitaryInput: return kNonUnitary;
    case ErrorCode::OpenLoop:
    case ErrorCode::NonUnitaryHolonomy: return kOpenLoop;
    case ErrorCode::ParseError:
    case ErrorCode::UnknownGate:
    case ErrorCode::ParamShapeMismatch:
    case ErrorCode::DimensionError:
    case ErrorCode::InvalidController:
    case ErrorCode::TooFewSamples: return kUsage;
    default: return kVerificationFailed;
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    parts.push_back(item);
  }
  return parts;
}

std::vector<std::size_t> parse_steps(const std::string& text) {
  if (text.empty()) return kDefaultSchedule;
  std::vector<std::size_t> steps;
  for (const auto& part : split_csv(text)) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value < 2)
      throw Error(ErrorCode::ParseError, "bad step count '" + part + "'");
    steps.push_back(value);
  }
  return steps;
}

SynthesisParams parse_params(const Options& o) {
  SynthesisParams p;
  if (!o.phases.empty())
    for (const auto& s : split_csv(o.phases)) p.phases.push_back(parse_angle(s));
  if (!o.windings.empty())
    for (const auto& s : split_csv(o.windings)) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError, "bad winding '" + s + "'");
      p.windings.push_back(value);
    }
  return p;
}

// Config file values fill in options the command line left unset.
void apply_config(CLI::App& sub, Options& o) {
  if (o.config.empty()) return;
  json j;
  try {
    j = json::parse(read_text_file(o.config));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  auto unset = [&](const char* flag) {
    const CLI::Option* opt = sub.get_option_no_throw(flag);
    return opt != nullptr && opt->count() == 0;
  };
  try {
    if (j.contains("tolerance") && unset("--tolerance")) o.tolerance = j["tolerance"].get<double>();
    if (j.contains("bound") && unset("--bound")) o.bound = j["bound"].get<double>();
    if (j.contains("seed") && unset("--seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("steps") && unset("--steps")) {
      const json& s = j["steps"];
      if (s.is_array()) {
        std::string joined;
        for (const auto& v : s) joined += (joined.empty() ? "" : ",") + std::to_string(v.get<std::size_t>());
        o.steps = joined;
      } else {
        o.steps = std::to_string(s.get<std::size_t>());
      }
    }
    if (j.contains("oracle") && unset("--oracle")) o.oracle = j["oracle"].get<bool>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
}

struct GateInput {
  std::string name;
  Unitary gate;
  std::optional<PaperOrder> paper_order;
};

GateInput load_gate(const Options& o) {
  if (!o.gate.empty()) {
    GateCatalogEntry e = catalog_get(o.gate, o.seed);
    return GateInput{e.name, e.matrix, e.paper_order};
  }
  ComplexMatrix m = read_matrix_file(o.matrix);
  try {
    return GateInput{"file:" + std::filesystem::path(o.matrix).filename().string(),
                     Unitary(std::move(m)), std::nullopt};
  } catch (const Error& e) {
    // a non-square matrix is simply not unitary
    throw Error(ErrorCode::NonUnitaryInput, e.what());
  }
}

SynthesisResult synthesize_gate(const GateInput& in, const Options& o) {
  const SynthesisParams params = parse_params(o);
  if (!o.paper_order) return synthesize(in.gate, params);
  if (!in.paper_order)
    throw Error(ErrorCode::ParamShapeMismatch, "gate '" + in.name + "' has no published channel order");
  return synthesize_with(in.gate, apply_paper_order(eig_unitary(in.gate), *in.paper_order), params);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
  file << text;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

int cmd_synthesize(const Options& o, std::ostream& out, std::ostream& err) {
  const GateInput in = load_gate(o);
  const SynthesisResult result = synthesize_gate(in, o);

  VerificationSummary ver;
  ver.closure_defect = loop_closure_defect(result.controller);
  try {
    const Unitary gamma = holonomy_analytic(result.controller);
    ver.holonomy_error = (gamma.matrix() - in.gate.matrix()).norm();
  } catch (const Error& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
  bool ok = ver.holonomy_error <= o.tolerance && ver.closure_defect <= o.tolerance;
  if (ok && o.oracle) {
    const OracleReport report = cross_validate(result.controller, in.gate, parse_steps(o.steps));
    ver.oracle = summarize(report);
    ok = report.deviation <= o.bound;
  }

  emit(o, serialize(make_document(in.name, result, o.paper_order, ver)), out);
  if (!ok) {
    err << "verification failed: holonomy error " << ver.holonomy_error << ", closure defect "
        << ver.closure_defect << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

struct LoadedController {
  Controller controller;
  Unitary gate;
};

LoadedController load_controller(const Options& o) {
  if (!o.doc.empty()) {
    const ControllerDocument doc = deserialize(read_text_file(o.doc));
    Controller x = document_controller(doc);
    try {
      return LoadedController{std::move(x), Unitary(doc.gate)};
    } catch (const Error& e) {
      throw Error(ErrorCode::NonUnitaryInput, e.what());
    }
  }
  const GateInput in = load_gate(o);
  SynthesisResult r = synthesize_gate(in, o);
  return LoadedController{std::move(r.controller), in.gate};
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedController loaded = load_controller(o);
  const OracleReport report = cross_validate(loaded.controller, loaded.gate, parse_steps(o.steps));
  const bool passed = report.deviation <= o.bound;
  json j = oracle_to_json(summarize(report));
  j["gamma_numeric"] = matrix_to_json(report.gamma_numeric.matrix());
  j["gamma_analytic"] = matrix_to_json(report.gamma_analytic.matrix());
  j["bound"] = o.bound;
  j["passed"] = passed;
  emit(o, canonical_dump(j), out);
  if (!passed) {
    err << "oracle deviation " << report.deviation << " exceeds bound " << o.bound << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const LoadedController loaded = load_controller(o);
  const std::vector<std::size_t> steps_list = parse_steps(o.steps.empty() ? "100" : o.steps);
  if (steps_list.size() != 1) throw Error(ErrorCode::ParseError, "sample takes a single step count");
  const std::size_t steps = steps_list.front();
  const Controller& x = loaded.controller;
  const ExtremalCurve curve(x);
  const Index n = x.n();
  const Index k = x.k();
  const bool bloch = (k == 1 && n == 2);

  std::string text = "t";
  auto header = [&](const char* name, Index rows, Index cols) {
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c)
        for (const char* part : {"re", "im"})
          text += "," + std::string(name) + "_" + std::to_string(r) + "_" + std::to_string(c) + "_" + part;
  };
  header("V", n, k);
  header("P", n, n);
  if (bloch) text += ",r1,r2,r3";
  text += "\n";

  auto append = [&](const ComplexMatrix& m) {
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c)
        text += "," + format_double(m(r, c).real()) + "," + format_double(m(r, c).imag());
  };
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    const ComplexMatrix v = curve.frame_at(t);
    const ComplexMatrix p = v * v.adjoint();
    text += format_double(t);
    append(v);
    append(p);
    if (bloch) {
      const BlochPoint b = bloch_point(p);
      for (double r : b.r) text += "," + format_double(r);
    }
    text += "\n";
  }
  emit(o, text, out);
  return kOk;
}

json catalog_entry_json(const GateCatalogEntry& e) {
  json j{{"name", e.name}, {"k", e.k}, {"matrix", matrix_to_json(e.matrix.matrix())}};
  if (e.paper_order)
    j["paper_order"] = json{{"permutation", e.paper_order->permutation},
                            {"column_phases", e.paper_order->column_phases}};
  else
    j["paper_order"] = nullptr;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal holonomic gate controllers: synthesis, sampling and verification",
               "isoholo"};
  app.require_subcommand(1);
  Options o;

  auto add_gate_options = [&](CLI::App* sub) {
    auto* gate = sub->add_option("--gate", o.gate, "Catalog gate name");
    auto* matrix = sub->add_option("--matrix", o.matrix, "JSON matrix file holding the gate");
    gate->excludes(matrix);
    matrix->excludes(gate);
    sub->add_option("--phases", o.phases, "Per-channel phases, comma separated (radians or pi forms)");
    sub->add_option("--windings", o.windings, "Per-channel winding numbers, comma separated");
    sub->add_flag("--paper-order", o.paper_order, "Use the catalog's published channel order");
    sub->add_option("--seed", o.seed, "Seed for random-<k> gates");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the result to this file instead of standard output");
    sub->add_option("--config", o.config, "JSON file with default option values");
  };

  CLI::App* synth = app.add_subcommand("synthesize", "Synthesize the controller of a gate");
  add_gate_options(synth);
  add_common(synth);
  synth->add_flag("--oracle", o.oracle, "Also run the numerical holonomy oracle");
  synth->add_option("--steps", o.steps, "Oracle step schedule, comma separated");
  synth->add_option("--tolerance", o.tolerance, "Bound on holonomy error and closure defect");
  synth->add_option("--bound", o.bound, "Bound on the oracle deviation");

  CLI::App* verify = app.add_subcommand("verify", "Cross-check a controller with the oracle");
  verify->add_option("--doc", o.doc, "Controller document to verify");
  add_gate_options(verify);
  add_common(verify);
  verify->add_option("--steps", o.steps, "Step schedule, comma separated");
  verify->add_option("--bound", o.bound, "Largest accepted deviation on the finest grid");
  verify->add_option("--tolerance", o.tolerance, "Unused by verify; accepted for uniformity");

  CLI::App* sample = app.add_subcommand("sample", "Sample the extremal curve as CSV");
  sample->add_option("--doc", o.doc, "Controller document to sample");
  add_gate_options(sample);
  add_common(sample);
  sample->add_option("--steps", o.steps, "Number of time steps");

  CLI::App* catalog = app.add_subcommand("catalog", "Inspect the gate catalog");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "List gate names");
  CLI::App* show = catalog->add_subcommand("show", "Print one gate");
  show->add_option("name", o.catalog_name, "Gate name")->required();
  show->add_option("--seed", o.seed, "Seed for random-<k> gates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (synth->parsed()) {
      apply_config(*synth, o);
      if (o.gate.empty() == o.matrix.empty()) {
        err << "synthesize: exactly one of --gate or --matrix is required\n";
        return kUsage;
      }
      return cmd_synthesize(o, out, err);
    }
    if (verify->parsed() || sample->parsed()) {
      CLI::App* sub = verify->parsed() ? verify : sample;
      apply_config(*sub, o);
      const int sources = int(!o.doc.empty()) + int(!o.gate.empty()) + int(!o.matrix.empty());
      if (sources != 1) {
        err << sub->get_name() << ": exactly one of --doc, --gate or --matrix is required\n";
        return kUsage;
      }
      return verify->parsed() ? cmd_verify(o, out, err) : cmd_sample(o, out);
    }
    if (list->parsed()) {
      for (const auto& name : catalog_names()) out << name << "\n";
      return kOk;
    }
    if (show->parsed()) {
      out << canonical_dump(catalog_entry_json(catalog_get(o.catalog_name, o.seed)));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace isoholo::cli
