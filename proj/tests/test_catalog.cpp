#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "isoholo/catalog.hpp"

using namespace isoholo;

namespace {

const Complex I(0.0, 1.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("catalog matrices") {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix had(2, 2);
  had << h, h, h, -h;
  CHECK((catalog_get("hadamard").matrix.matrix() - had).norm() == 0.0);

  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK((catalog_get("cnot").matrix.matrix() - cnot).norm() == 0.0);

  ComplexMatrix dft(4, 4);
  dft << 1, 1, 1, 1, 1, I, -1, -I, 1, -1, 1, -1, 1, -I, -1, I;
  CHECK((catalog_get("dft2").matrix.matrix() - dft / 2.0).norm() == 0.0);

  const GateCatalogEntry id = catalog_get("identity-3");
  CHECK(id.k == 3);
  CHECK((id.matrix.matrix() - ComplexMatrix::Identity(3, 3)).norm() == 0.0);

  CHECK(std::abs(catalog_get("phase(pi/2)").matrix.matrix()(1, 1) - I) < 1e-15);
  CHECK(std::abs(catalog_get("berry(pi)").matrix.matrix()(0, 0) + 1.0) < 1e-15);
  CHECK(catalog_get("berry(pi)").k == 1);
}

TEST_CASE("every catalog entry is unitary to 1e-15") {
  for (const std::string& name : catalog_fixed_names()) {
    const GateCatalogEntry g = catalog_get(name);
    CHECK(g.name == name);
    CHECK(g.k == g.matrix.dim());
    CHECK(unitarity_defect(g.matrix.matrix()) <= 1e-15);
  }
}

TEST_CASE("random gates are seeded") {
  const GateCatalogEntry a = catalog_get("random-3", 5);
  const GateCatalogEntry b = catalog_get("random-3", 5);
  const GateCatalogEntry c = catalog_get("random-3", 6);
  CHECK((a.matrix.matrix() - b.matrix.matrix()).norm() == 0.0);
  CHECK((a.matrix.matrix() - c.matrix.matrix()).norm() > 0.1);
  CHECK(unitarity_defect(a.matrix.matrix()) < 1e-13);
}

TEST_CASE("unknown names") {
  for (const char* name : {"hadamrd", "identity-0", "identity-x", "random-", "random-65", "phase()", "phase(pie)", ""})
    CHECK(code_of([&] { catalog_get(name); }) != ErrorCode::NonUnitaryInput);
  CHECK(code_of([] { catalog_get("toffoli"); }) == ErrorCode::UnknownGate);
  CHECK(code_of([] { catalog_get("identity-0"); }) == ErrorCode::UnknownGate);
  CHECK(code_of([] { catalog_get("phase(pie)"); }) == ErrorCode::ParseError);
}

TEST_CASE("parse_angle") {
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("-1e-3") == -1e-3);
  CHECK(parse_angle("pi") == kPi);
  CHECK(parse_angle("-pi") == -kPi);
  CHECK(parse_angle("pi/4") == doctest::Approx(kPi / 4));
  CHECK(parse_angle("3pi/2") == doctest::Approx(3 * kPi / 2));
  CHECK(parse_angle("0.5*pi") == doctest::Approx(kPi / 2));
  CHECK(code_of([] { parse_angle("pi/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_angle("two"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_angle("1.0x"); }) == ErrorCode::ParseError);
}

TEST_CASE("published channel orders are permutations") {
  for (const std::string& name : catalog_fixed_names()) {
    const GateCatalogEntry g = catalog_get(name);
    if (!g.paper_order) continue;
    std::vector<int> sorted = g.paper_order->permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) CHECK(sorted[j] == static_cast<int>(j) + 1);
  }
  CHECK(catalog_get("hadamard").paper_order.has_value());
  CHECK(catalog_get("cnot").paper_order.has_value());
  CHECK(catalog_get("dft2").paper_order.has_value());
  CHECK_FALSE(catalog_get("swap").paper_order.has_value());
}

TEST_CASE("apply_paper_order") {
  const GateCatalogEntry g = catalog_get("dft2");
  const UnitaryEigen canonical = eig_unitary(g.matrix);
  const UnitaryEigen ordered = apply_paper_order(canonical, *g.paper_order);
  CHECK(ordered.phases[2] == canonical.phases[3]);
  CHECK(ordered.phases[3] == canonical.phases[2]);
  CHECK((ordered.vectors.matrix().col(2) + canonical.vectors.matrix().col(3)).norm() < 1e-15);
  CHECK((ordered.vectors.matrix().col(0) - canonical.vectors.matrix().col(0)).norm() == 0.0);

  CHECK(code_of([&] { apply_paper_order(canonical, PaperOrder{{1, 2, 3}, {0, 0, 0}}); }) ==
        ErrorCode::ParamShapeMismatch);
  CHECK(code_of([&] { apply_paper_order(canonical, PaperOrder{{1, 1, 2, 3}, {0, 0, 0, 0}}); }) ==
        ErrorCode::ParamShapeMismatch);
  CHECK(code_of([&] { apply_paper_order(canonical, PaperOrder{{1, 2, 3, 4}, {0, 0}}); }) ==
        ErrorCode::ParamShapeMismatch);
}

TEST_CASE("catalog_names lists the templates") {
  const std::vector<std::string> names = catalog_names();
  CHECK(std::find(names.begin(), names.end(), "dft2") != names.end());
  CHECK(std::find(names.begin(), names.end(), "identity-<k>") != names.end());
}
