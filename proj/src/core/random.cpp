// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/core/random.hpp"

#include <cmath>

#include "dysonsim/core/linalg.hpp"

namespace dysonsim {

ComplexOperator random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexOperator m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexOperator random_hermitian(Eigen::Index dim, Rng& rng, double norm) {
  const ComplexOperator g = random_gaussian(dim, dim, rng);
  ComplexOperator h = 0.5 * (g + g.adjoint());
  const double n = spectral_norm(h);
  if (n > 0.0) h *= norm / n;
  return h;
}

ComplexOperator random_unitary(Eigen::Index dim, Rng& rng) {
  const ComplexOperator g = random_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<ComplexOperator> qr(g);
  ComplexOperator q = qr.householderQ() * ComplexOperator::Identity(dim, dim);
  const ComplexOperator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

ComplexOperator random_scaled(Eigen::Index dim, Rng& rng, double norm) {
  ComplexOperator m = random_gaussian(dim, dim, rng);
  const double n = spectral_norm(m);
  if (n > 0.0) m *= norm / n;
  return m;
}

StateVector random_state(Eigen::Index dim, Rng& rng) {
  const ComplexOperator g = random_gaussian(dim, 1, rng);
  StateVector v = g.col(0);
  return v / v.norm();
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace dysonsim
