#include <doctest.h>

#include <cmath>
#include <vector>

#include "isoholo/bundle.hpp"
#include "isoholo/extremal.hpp"
#include "isoholo/random.hpp"
#include "isoholo/synth.hpp"
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

Unitary hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m << h, h, h, -h;
  return Unitary(m);
}

Controller random_controller(Index k, Index n, Rng& rng) {
  return Controller(random_skew(k, 1.0, rng), gaussian_matrix(k, n - k, rng));
}

std::vector<StiefelFrame> frames(const Controller& x, int samples) {
  const ExtremalCurve curve(x);
  std::vector<StiefelFrame> out;
  for (int i = 0; i < samples; ++i) out.emplace_back(curve.frame_at(static_cast<double>(i) / (samples - 1)));
  return out;
}

std::vector<GrassmannProjector> projectors(const Controller& x, int samples) {
  const ExtremalCurve curve(x);
  std::vector<GrassmannProjector> out;
  for (int i = 0; i < samples; ++i) out.emplace_back(curve.projector_at(static_cast<double>(i) / (samples - 1)));
  return out;
}

}  // namespace

TEST_CASE("standard_base_frame") {
  CHECK((standard_base_frame(2, 1).matrix() - ComplexMatrix::Identity(2, 1)).norm() == 0.0);
  const StiefelFrame v = standard_base_frame(4, 2);
  CHECK(v.n() == 4);
  CHECK(v.k() == 2);
  CHECK((v.matrix().topRows(2) - ComplexMatrix::Identity(2, 2)).norm() == 0.0);
  CHECK(v.matrix().bottomRows(2).norm() == 0.0);
  CHECK((standard_base_frame(3, 2).matrix() - ComplexMatrix::Identity(3, 2)).norm() == 0.0);
  CHECK(code_of([] { standard_base_frame(2, 2); }) == ErrorCode::DimensionError);
  CHECK(code_of([] { standard_base_frame(3, 0); }) == ErrorCode::DimensionError);
}

TEST_CASE("frames and projectors validate their invariants") {
  ComplexMatrix bad(2, 1);
  bad << 1.0, 0.1;
  CHECK(code_of([&] { StiefelFrame{bad}; }) == ErrorCode::InvalidFrame);
  ComplexMatrix p(2, 2);
  p << 1.0, 0.0, 0.0, 0.5;
  CHECK(code_of([&] { GrassmannProjector{p}; }) == ErrorCode::InvalidProjector);
  ComplexMatrix nonherm(2, 2);
  nonherm << 1.0, 1.0, 0.0, 0.0;
  CHECK(code_of([&] { GrassmannProjector{nonherm}; }) == ErrorCode::InvalidProjector);
  CHECK(code_of([] { GrassmannProjector{ComplexMatrix::Zero(3, 3)}; }) == ErrorCode::InvalidProjector);
}

TEST_CASE("project: examples") {
  CHECK((project(standard_base_frame(2, 1)).matrix() - oracle::base_projector(2, 1)).norm() == 0.0);
  ComplexMatrix v(2, 1);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  ComplexMatrix expected(2, 2);
  expected << 0.5, 0.5, 0.5, 0.5;
  const GrassmannProjector p = project(StiefelFrame(v));
  CHECK((p.matrix() - expected).norm() < 1e-15);
  CHECK(p.k() == 1);
}

TEST_CASE("project is fiber-invariant and yields valid projectors") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 5;
    const Index k = 1 + trial % (n - 1);
    const StiefelFrame v(haar_unitary(n, rng).matrix().leftCols(k));
    const ComplexMatrix h = haar_unitary(k, rng).matrix();
    const GrassmannProjector p = project(v);
    CHECK((project(StiefelFrame(v.matrix() * h)).matrix() - p.matrix()).norm() < 1e-12);
    const ComplexMatrix& m = p.matrix();
    CHECK((m * m - m).norm() < 1e-12);
    CHECK((m.adjoint() - m).norm() < 1e-12);
    CHECK(std::abs(m.trace() - Complex(static_cast<double>(k))) < 1e-12);
    CHECK(p.k() == k);
  }
}

TEST_CASE("connection_sample") {
  Rng rng(4);
  const StiefelFrame v(haar_unitary(4, rng).matrix().leftCols(2));

  CHECK(connection_sample(v, ComplexMatrix::Zero(4, 2)).value.matrix().norm() == 0.0);

  const SkewHermitian omega = random_skew(2, 1.0, rng);
  const ConnectionSample vertical = connection_sample(v, v.matrix() * omega.matrix());
  CHECK((vertical.value.matrix() - omega.matrix()).norm() < 1e-12);
  CHECK_FALSE(vertical.hermitian_part_flagged);

  // a Hermitian V†Vdot is not a tangent vector of the Stiefel manifold
  const ConnectionSample stretched = connection_sample(v, v.matrix() * ComplexMatrix::Identity(2, 2));
  CHECK(stretched.hermitian_part == doctest::Approx(std::sqrt(2.0)));
  CHECK(stretched.hermitian_part_flagged);
  CHECK(stretched.value.matrix().norm() < 1e-15);

  CHECK(code_of([&] { connection_sample(v, ComplexMatrix::Zero(4, 1)); }) == ErrorCode::DimensionError);
}

TEST_CASE("connection_sample vanishes along extremal curves") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Controller x = random_controller(2, 5, rng);
    const ExtremalCurve curve(x);
    const double t = 0.05 * trial;
    const StiefelFrame v(curve.frame_at(t));
    // d/dt e^{tX}V₀e^{−tΩ} = XV − VΩ
    const ComplexMatrix vdot = x.matrix().matrix() * v.matrix() - v.matrix() * x.omega().matrix();
    CHECK(connection_sample(v, vdot).value.matrix().norm() < 1e-10);
    const double dt = 1e-4;
    const ComplexMatrix fd = (curve.frame_at(t + dt) - curve.frame_at(t - dt)) / (2 * dt);
    CHECK(connection_sample(v, fd).value.matrix().norm() < 1e-6);
  }
}

TEST_CASE("horizontality_defect: constant and vertical curves") {
  const std::vector<StiefelFrame> still(5, standard_base_frame(3, 1));
  CHECK(horizontality_defect(still, 0.1) == 0.0);

  Rng rng(12);
  const SkewHermitian omega = random_skew(2, 1.0, rng);
  const SkewExponential e(omega);
  std::vector<StiefelFrame> vertical;
  const double dt = 1e-3;
  for (int i = 0; i < 101; ++i) vertical.emplace_back(standard_base_frame(4, 2).matrix() * e.at(i * dt));
  CHECK(horizontality_defect(vertical, dt) == doctest::Approx(omega.matrix().norm()).epsilon(1e-5));

  CHECK(code_of([&] { horizontality_defect(std::span(still).first(2), 0.1); }) == ErrorCode::TooFewSamples);
}

TEST_CASE("horizontality_defect of the Hadamard curve") {
  const SynthesisResult r = synthesize(hadamard());
  const double defect = horizontality_defect(frames(r.controller, 1001), 1e-3);
  CHECK(defect < 1e-5);
}

TEST_CASE("horizontality_defect of extremal curves shrinks as dt^2") {
  Rng rng(21);
  const Controller x = random_controller(1, 3, rng);
  const double coarse = horizontality_defect(frames(x, 101), 1e-2);
  const double fine = horizontality_defect(frames(x, 201), 5e-3);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("loop_length_numeric: examples") {
  const std::vector<GrassmannProjector> still(7, project(standard_base_frame(2, 1)));
  CHECK(loop_length_numeric(still, 0.1) == 0.0);

  ComplexMatrix phase(1, 1);
  phase << -1.0;
  const SynthesisResult berry = synthesize(Unitary(phase));
  CHECK(loop_length_numeric(projectors(berry.controller, 100001), 1e-5) ==
        doctest::Approx(kPi * kPi).epsilon(1e-8));

  const SynthesisResult h = synthesize(hadamard());
  const double analytic = h.controller.w().squaredNorm();
  CHECK(std::abs(loop_length_numeric(projectors(h.controller, 100001), 1e-5) - analytic) < 1e-6);

  CHECK(code_of([&] { loop_length_numeric(std::span(still).first(2), 0.1); }) == ErrorCode::TooFewSamples);
}

TEST_CASE("loop_length_numeric converges quadratically") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const Controller x = random_controller(2, 4, rng);
    const double analytic = length_analytic(x);
    double previous = 0.0;
    for (int samples : {51, 101, 201, 401}) {
      const double err = std::abs(loop_length_numeric(projectors(x, samples), 1.0 / (samples - 1)) - analytic);
      if (previous > 0.0) CHECK(previous / err >= 3.5);
      previous = err;
    }
  }
}
