#include "isoholo/mathcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace isoholo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitaryInput: return "NonUnitaryInput";
    case ErrorCode::NonSkewInput: return "NonSkewInput";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::InvalidProjector: return "InvalidProjector";
    case ErrorCode::InvalidController: return "InvalidController";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::OpenLoop: return "OpenLoop";
    case ErrorCode::NonUnitaryHolonomy: return "NonUnitaryHolonomy";
    case ErrorCode::ParamShapeMismatch: return "ParamShapeMismatch";
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

bool all_finite(const ComplexMatrix& m) {
  for (Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double skewness_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a + a.adjoint()).norm();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

double wrap_phase(double phase) {
  double g = std::fmod(phase, kTwoPi);
  if (g < 0.0) g += kTwoPi;
  if (g >= kTwoPi - 1e-12) g = 0.0;
  return g;
}

SkewHermitian::SkewHermitian(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw Error(ErrorCode::DimensionError, "skew-Hermitian matrix must be square and non-empty");
  if (!all_finite(m_)) throw Error(ErrorCode::NonSkewInput, "non-finite entry");
  const double defect = skewness_defect(m_);
  if (defect > tol.skewness)
    throw Error(ErrorCode::NonSkewInput, "‖A + A†‖ = " + std::to_string(defect));
}

SkewHermitian SkewHermitian::zero(Index dim) {
  return SkewHermitian(ComplexMatrix::Zero(dim, dim), Unchecked{});
}

Unitary::Unitary(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw Error(ErrorCode::DimensionError, "unitary matrix must be square and non-empty");
  if (!all_finite(m_)) throw Error(ErrorCode::NonUnitaryInput, "non-finite entry");
  const double defect = unitarity_defect(m_);
  if (defect > tol.unitarity)
    throw Error(ErrorCode::NonUnitaryInput, "‖U†U − I‖ = " + std::to_string(defect));
}

Unitary Unitary::identity(Index dim) { return Unitary(ComplexMatrix::Identity(dim, dim)); }

namespace {

constexpr double kClusterGap = 1e-9;
constexpr double kTieTolerance = 1e-9;

// Rotates v so that its largest-magnitude entry (lowest index on ties) is
// real positive.
void fix_column_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  const double largest = v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= largest - kTieTolerance) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

// Deterministic orthonormal basis of the range of an orthogonal projector of
// the given rank: greedy Gram-Schmidt over its columns, always taking the
// column with the largest remaining norm.
ComplexMatrix canonical_basis(const ComplexMatrix& projector, Index rank) {
  const Index n = projector.rows();
  ComplexMatrix basis(n, rank);
  ComplexMatrix residual = projector;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Index j = 0; j < rank; ++j) {
    Index pivot = -1;
    double best = -1.0;
    for (Index i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const double norm = residual.col(i).norm();
      if (norm > best + kTieTolerance) {
        best = norm;
        pivot = i;
      }
    }
    used[static_cast<std::size_t>(pivot)] = true;
    Eigen::VectorXcd v = residual.col(pivot) / best;
    // one reorthogonalization pass against the accepted columns
    v -= basis.leftCols(j) * (basis.leftCols(j).adjoint() * v);
    v.normalize();
    basis.col(j) = v;
    residual -= v * (v.adjoint() * residual);
  }
  for (Index j = 0; j < rank; ++j) fix_column_phase(basis.col(j));
  return basis;
}

}  // namespace

UnitaryEigen eig_unitary(const Unitary& u, const Tolerances& tol) {
  const ComplexMatrix& m = u.matrix();
  const Index k = m.rows();

  Eigen::ComplexSchur<ComplexMatrix> schur(m);
  if (schur.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "complex Schur iteration did not converge");

  // A normal matrix has a diagonal Schur form, so the Schur vectors are
  // eigenvectors.
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& q = schur.matrixU();

  std::vector<double> raw(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) raw[static_cast<std::size_t>(i)] = wrap_phase(std::arg(t(i, i)));

  std::vector<Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return raw[static_cast<std::size_t>(a)] < raw[static_cast<std::size_t>(b)];
  });

  ComplexMatrix r(k, k);
  std::vector<double> phases(static_cast<std::size_t>(k));
  Index start = 0;
  while (start < k) {
    Index stop = start + 1;
    while (stop < k && raw[static_cast<std::size_t>(order[static_cast<std::size_t>(stop)])] -
                               raw[static_cast<std::size_t>(order[static_cast<std::size_t>(stop - 1)])] <
                           kClusterGap)
      ++stop;
    const Index size = stop - start;
    ComplexMatrix cluster(k, size);
    for (Index j = 0; j < size; ++j) {
      const Index src = order[static_cast<std::size_t>(start + j)];
      cluster.col(j) = q.col(src);
      phases[static_cast<std::size_t>(start + j)] = raw[static_cast<std::size_t>(src)];
    }
    r.middleCols(start, size) = canonical_basis(cluster * cluster.adjoint(), size);
    start = stop;
  }

  ComplexMatrix diag = ComplexMatrix::Zero(k, k);
  for (Index j = 0; j < k; ++j) diag(j, j) = std::polar(1.0, phases[static_cast<std::size_t>(j)]);
  const double residual = (r.adjoint() * m * r - diag).norm();
  if (residual > tol.reconstruction)
    throw Error(ErrorCode::ConvergenceFailure,
                "eigen-reconstruction residual " + std::to_string(residual));

  return UnitaryEigen{Unitary(std::move(r), tol), std::move(phases)};
}

SkewExponential::SkewExponential(const SkewHermitian& a) {
  // A = iH with H Hermitian.
  const ComplexMatrix h = Complex(0.0, -1.0) * a.matrix();
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  vectors_ = solver.eigenvectors();
  frequencies_ = solver.eigenvalues();
}

ComplexMatrix SkewExponential::at(double t) const {
  Eigen::VectorXcd phases(frequencies_.size());
  for (Index i = 0; i < frequencies_.size(); ++i) phases(i) = std::polar(1.0, t * frequencies_(i));
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

Unitary expm_skew(const SkewHermitian& a, double t, const Tolerances& tol) {
  return Unitary(SkewExponential(a).at(t), tol);
}

Unitary polar_unitary(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw Error(ErrorCode::DimensionError, "polar decomposition needs a square matrix");
  if (!all_finite(m)) throw Error(ErrorCode::SingularInput, "non-finite entry");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smallest = svd.singularValues().minCoeff();
  if (smallest < tol.singularity)
    throw Error(ErrorCode::SingularInput, "smallest singular value " + std::to_string(smallest));
  return Unitary(svd.matrixU() * svd.matrixV().adjoint(), tol);
}

}  // namespace isoholo
