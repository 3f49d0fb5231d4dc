#include "isoholo/catalog.hpp"

#include <cmath>
#include <regex>
#include <set>

#include "isoholo/random.hpp"

namespace isoholo {

namespace {

constexpr Index kMaxDim = 64;

ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

GateCatalogEntry entry(std::string name, ComplexMatrix m,
                       std::optional<PaperOrder> order = std::nullopt) {
  const Index k = m.rows();
  return GateCatalogEntry{std::move(name), k, Unitary(std::move(m)), std::move(order)};
}

std::optional<Index> parse_dimension(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.size() > 3 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::UnknownGate, "bad dimension in '" + name + "'");
  const Index k = std::stol(digits);
  if (k < 1 || k > kMaxDim) throw Error(ErrorCode::UnknownGate, "dimension out of range in '" + name + "'");
  return k;
}

std::optional<std::string> parse_call(const std::string& name, const std::string& fn) {
  const std::string open = fn + "(";
  if (name.rfind(open, 0) != 0 || name.back() != ')') return std::nullopt;
  return name.substr(open.size(), name.size() - open.size() - 1);
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*(-?)\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double sign = m[1].length() ? -1.0 : 1.0;
    const double num = m[2].length() ? std::stod(m[2].str()) : 1.0;
    const double den = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (den == 0.0) throw Error(ErrorCode::ParseError, "division by zero in angle '" + text + "'");
    return sign * num * kPi / den;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "cannot parse angle '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value))
    throw Error(ErrorCode::ParseError, "cannot parse angle '" + text + "'");
  return value;
}

GateCatalogEntry catalog_get(const std::string& name, std::uint64_t seed) {
  const Complex i(0.0, 1.0);
  const double h = 1.0 / std::sqrt(2.0);

  if (name == "hadamard")
    return entry(name, from_rows({{h, h}, {h, -h}}), PaperOrder{{1, 2}, {0.0, 0.0}});
  if (name == "pauli-x") return entry(name, from_rows({{0, 1}, {1, 0}}));
  if (name == "pauli-y") return entry(name, from_rows({{0, -i}, {i, 0}}));
  if (name == "pauli-z") return entry(name, from_rows({{1, 0}, {0, -1}}));
  if (name == "s") return entry(name, from_rows({{1, 0}, {0, i}}));
  if (name == "t") return entry(name, from_rows({{1, 0}, {0, Complex(h, h)}}));
  if (name == "cnot")
    return entry(name, from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
                 PaperOrder{{1, 2, 3, 4}, {0.0, 0.0, 0.0, kPi}});
  if (name == "cz")
    return entry(name, from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}));
  if (name == "swap")
    return entry(name, from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  if (name == "dft2") {
    ComplexMatrix m(4, 4);
    // (1/2)·i^{jk}
    const Complex powers[4] = {1.0, i, -1.0, -i};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = 0.5 * powers[(r * c) % 4];
    return entry(name, std::move(m), PaperOrder{{1, 2, 4, 3}, {0.0, 0.0, kPi, kPi}});
  }
  if (auto k = parse_dimension(name, "identity-"))
    return entry(name, ComplexMatrix::Identity(*k, *k));
  if (auto k = parse_dimension(name, "random-")) {
    Rng rng(seed);
    return GateCatalogEntry{name, *k, haar_unitary(*k, rng), std::nullopt};
  }
  if (auto arg = parse_call(name, "phase")) {
    const double g = parse_angle(*arg);
    return entry(name, from_rows({{1, 0}, {0, std::polar(1.0, g)}}));
  }
  if (auto arg = parse_call(name, "berry")) {
    const double g = parse_angle(*arg);
    return entry(name, from_rows({{std::polar(1.0, g)}}));
  }
  throw Error(ErrorCode::UnknownGate, "no catalog gate named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"hadamard", "pauli-x",   "pauli-y",        "pauli-z",        "s",
          "t",        "cnot",      "cz",             "swap",           "dft2",
          "identity-<k>", "random-<k>", "phase(<angle>)", "berry(<angle>)"};
}

std::vector<std::string> catalog_fixed_names() {
  return {"identity-1", "identity-2", "hadamard", "pauli-x", "pauli-y", "pauli-z",
          "s",          "t",          "cnot",     "cz",      "swap",    "dft2"};
}

UnitaryEigen apply_paper_order(const UnitaryEigen& eig, const PaperOrder& order) {
  const Index k = eig.vectors.dim();
  const auto ks = static_cast<std::size_t>(k);
  if (order.permutation.size() != ks || order.column_phases.size() != ks)
    throw Error(ErrorCode::ParamShapeMismatch, "channel order has the wrong length");
  std::set<int> seen(order.permutation.begin(), order.permutation.end());
  if (seen.size() != ks || *seen.begin() != 1 || *seen.rbegin() != static_cast<int>(k))
    throw Error(ErrorCode::ParamShapeMismatch, "channel order is not a permutation of 1..k");

  ComplexMatrix r(k, k);
  std::vector<double> phases(ks);
  for (std::size_t j = 0; j < ks; ++j) {
    const auto src = static_cast<std::size_t>(order.permutation[j] - 1);
    r.col(static_cast<Index>(j)) =
        eig.vectors.matrix().col(static_cast<Index>(src)) * std::polar(1.0, order.column_phases[j]);
    phases[j] = eig.phases[src];
  }
  return UnitaryEigen{Unitary(std::move(r)), std::move(phases)};
}

}  // namespace isoholo
