#include "isoholo/random.hpp"

#include <Eigen/QR>

namespace isoholo {

ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

Unitary haar_unitary(Index dim, Rng& rng) {
  const ComplexMatrix z = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return Unitary(std::move(q));
}

SkewHermitian random_skew(Index dim, double scale, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  return SkewHermitian(ComplexMatrix(0.5 * scale * (g - g.adjoint())));
}

}  // namespace isoholo
