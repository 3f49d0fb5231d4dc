#include <doctest.h>

#include <cmath>
#include <vector>

#include "isoholo/abelian.hpp"
#include "isoholo/bundle.hpp"
#include "isoholo/catalog.hpp"
#include "isoholo/random.hpp"
#include "isoholo/synth.hpp"
#include "isoholo/verify.hpp"
#include "oracles.hpp"

using namespace isoholo;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

Controller hadamard_controller() {
  return synthesize(catalog_get("hadamard").matrix).controller;
}

Controller berry_pi() {
  return berry_controller(kPi, 0.0, 1).to_controller();
}

}  // namespace

TEST_CASE("sample_loop examples") {
  Rng rng(1);
  const Controller still(random_skew(2, 1.0, rng), ComplexMatrix::Zero(2, 2));
  const SampledLoop c = sample_loop(still, 7);
  CHECK(c.steps() == 7);
  for (const GrassmannProjector& p : c.projectors()) CHECK((p.matrix() - oracle::base_projector(4, 2)).norm() < 1e-15);

  const SampledLoop h = sample_loop(hadamard_controller(), 4);
  REQUIRE(h.projectors().size() == 5);
  CHECK(h.times() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK((h.projectors().front().matrix() - oracle::base_projector(4, 2)).norm() < 1e-15);
  CHECK((h.projectors().back().matrix() - oracle::base_projector(4, 2)).norm() < 1e-10);
  CHECK(h.n() == 4);
  CHECK(h.k() == 2);

  const SampledLoop b = sample_loop(berry_pi(), 2);
  ComplexMatrix south = ComplexMatrix::Zero(2, 2);
  south(1, 1) = 1.0;
  CHECK((b.projectors()[1].matrix() - south).norm() < 1e-12);
}

TEST_CASE("sample_loop errors") {
  Rng rng(2);
  const Controller open(random_skew(1, 1.0, rng), gaussian_matrix(1, 2, rng));
  CHECK(code_of([&] { sample_loop(open, 10); }) == ErrorCode::OpenLoop);
  CHECK(code_of([&] { sample_loop(hadamard_controller(), 1); }) == ErrorCode::TooFewSamples);

  const GrassmannProjector p0 = project(standard_base_frame(2, 1));
  CHECK(code_of([&] { SampledLoop({0.0, 1.0}, {p0, p0}); }) == ErrorCode::TooFewSamples);
  const GrassmannProjector other = project(StiefelFrame(ComplexMatrix::Identity(2, 2).col(1)));
  CHECK(code_of([&] { SampledLoop({0.0, 0.5, 1.0}, {p0, p0, other}); }) == ErrorCode::OpenLoop);
}

TEST_CASE("numeric_holonomy examples") {
  const GrassmannProjector p0 = project(standard_base_frame(3, 1));
  const SampledLoop constant({0.0, 0.5, 1.0}, {p0, p0, p0});
  CHECK((numeric_holonomy(constant).matrix() - ComplexMatrix::Identity(1, 1)).norm() < 1e-15);

  const Unitary b = numeric_holonomy(sample_loop(berry_pi(), 100000));
  CHECK(std::abs(b.matrix()(0, 0) + 1.0) < 1e-3);

  const Unitary h = numeric_holonomy(sample_loop(hadamard_controller(), 100000));
  CHECK((h.matrix() - catalog_get("hadamard").matrix.matrix()).norm() < 1e-3);
}

TEST_CASE("numeric_holonomy errors") {
  // the half-turn loop passes through the orthogonal complement of P₀
  CHECK(code_of([] { numeric_holonomy(sample_loop(berry_pi(), 2)); }) == ErrorCode::SingularInput);
  const GrassmannProjector q = project(StiefelFrame(ComplexMatrix::Identity(2, 2).col(1)));
  CHECK(code_of([&] { numeric_holonomy(SampledLoop({0.0, 0.5, 1.0}, {q, q, q})); }) == ErrorCode::InvalidFrame);
}

TEST_CASE("numeric_holonomy is unitary") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Controller x = synthesize(haar_unitary(1 + trial % 3, rng)).controller;
    CHECK(unitarity_defect(numeric_holonomy(sample_loop(x, 50 + trial)).matrix()) < 1e-12);
  }
}

TEST_CASE("cross_validate: identity loop is exact") {
  const Controller x = synthesize(Unitary::identity(2)).controller;
  const OracleReport r = cross_validate(x, Unitary::identity(2), {1000, 10000});
  for (double d : r.deviations) CHECK(d < 1e-12);
  CHECK(std::isnan(r.convergence_order_estimate));
  CHECK_FALSE(r.anomalous);
}

TEST_CASE("cross_validate: great-circle channels are exact at every step count") {
  // every non-trivial Hadamard channel has gamma = pi
  const Unitary h = catalog_get("hadamard").matrix;
  const OracleReport r = cross_validate(hadamard_controller(), h, {1000, 10000, 100000});
  REQUIRE(r.deviations.size() == 3);
  for (double d : r.deviations) CHECK(d < 1e-10);
  CHECK(r.steps == 100000);
  CHECK(r.deviation == r.deviations.back());
  CHECK(r.deviation == doctest::Approx((r.gamma_numeric.matrix() - r.gamma_analytic.matrix()).norm()));
  CHECK_FALSE(r.anomalous);
}

TEST_CASE("cross_validate: the projector chain converges at second order") {
  Rng rng(4);
  for (int trial = 0; trial < 3; ++trial) {
    const Unitary u = haar_unitary(3, rng);
    const OracleReport r = cross_validate(synthesize(u).controller, u, {1000, 10000});
    CHECK(r.deviation < 1e-2);
    CHECK(r.deviations[0] / r.deviations[1] == doctest::Approx(100.0).epsilon(0.02));
    CHECK(r.convergence_order_estimate == doctest::Approx(-2.0).epsilon(0.01));
    CHECK(r.anomalous);
  }
}

TEST_CASE("cross_validate: oracle agrees with the closed form on random gates") {
  Rng rng(5);
  for (Index k = 1; k <= 2; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const Unitary u = haar_unitary(k, rng);
      const OracleReport r = cross_validate(synthesize(u).controller, u, {1000, 10000, 100000});
      CHECK(r.deviation < 2e-3);
      for (std::size_t i = 1; i < r.deviations.size(); ++i)
        if (r.deviations[i - 1] > kRoundoffFloor) CHECK(r.deviations[i] < r.deviations[i - 1]);
    }
  }
}

TEST_CASE("cross_validate errors") {
  const Unitary h = catalog_get("hadamard").matrix;
  CHECK(code_of([&] { cross_validate(hadamard_controller(), h, {}); }) == ErrorCode::TooFewSamples);
  CHECK(code_of([&] { cross_validate(hadamard_controller(), Unitary::identity(3), {100}); }) ==
        ErrorCode::DimensionError);
}

TEST_CASE("gauge_invariance_check") {
  const GrassmannProjector p0 = project(standard_base_frame(4, 2));
  CHECK(gauge_invariance_check(SampledLoop({0.0, 0.5, 1.0}, {p0, p0, p0}), 5, 1) < 1e-12);
  CHECK(gauge_invariance_check(sample_loop(hadamard_controller(), 1000), 5, 2) < 1e-12);
  CHECK(gauge_invariance_check(sample_loop(berry_pi(), 1000), 5, 3) < 1e-12);
  Rng rng(6);
  const Unitary u = haar_unitary(3, rng);
  CHECK(gauge_invariance_check(sample_loop(synthesize(u).controller, 500), 5, 4) < 1e-12);
}

TEST_CASE("reparametrized loops give the same holonomy") {
  Rng rng(7);
  auto warp = [](double t) { return t - std::sin(kTwoPi * t) / (3.0 * kTwoPi); };
  for (int trial = 0; trial < 3; ++trial) {
    const Unitary u = haar_unitary(2, rng);
    const Controller x = synthesize(u).controller;
    const Unitary plain = numeric_holonomy(sample_loop(x, 100000));
    const Unitary warped = numeric_holonomy(sample_loop_warped(x, 100000, warp));
    CHECK((plain.matrix() - warped.matrix()).norm() < 5e-3);
  }
  const Controller h = hadamard_controller();
  CHECK((numeric_holonomy(sample_loop(h, 1000)).matrix() -
         numeric_holonomy(sample_loop_warped(h, 1000, warp)).matrix())
            .norm() < 1e-10);
}

TEST_CASE("length of the sampled loop matches the closed form") {
  Rng rng(8);
  const Unitary u = haar_unitary(2, rng);
  const Controller x = synthesize(u).controller;
  const SampledLoop loop = sample_loop(x, 100000);
  CHECK(std::abs(loop_length_numeric(loop.projectors(), 1e-5) - length_analytic(x)) < 1e-6);
}
