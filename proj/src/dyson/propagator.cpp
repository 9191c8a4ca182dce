// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/dyson/dyson.hpp"

namespace dysonsim {
namespace {

constexpr int kMaxExtrapolationDepth = 8;
constexpr int kMinLevels = 3;

ComplexOperator nearest_unitary(const ComplexOperator& a) {
  Eigen::JacobiSVD<ComplexOperator> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

ComplexOperator product_formula(const HamiltonianFunction& generator, double t,
                                std::uint64_t r) {
  if (r == 0) throw InvalidArgument("product_formula: r must be >= 1");
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("product_formula: t must be >= 0");
  const double dt = t / static_cast<double>(r);
  ComplexOperator u;
  for (std::uint64_t j = 0; j < r; ++j) {
    const ComplexOperator h = generator(static_cast<double>(j) * dt);
    require_hermitian(h, "product_formula: H(s)");
    if (j == 0) {
      u = matrix_exponential(h, dt);
    } else {
      u = matrix_exponential(h, dt) * u;
    }
  }
  return u;
}

PropagatorResult exact_propagator_detailed(const HamiltonianFunction& generator, double t,
                                           double tol, std::uint64_t max_steps) {
  if (!(tol > 0.0)) throw InvalidArgument("exact_propagator: tol must be positive");
  // Romberg tableau over step doubling; each row extrapolates the first-order
  // error series of the left-endpoint formula.
  std::vector<ComplexOperator> prev_row;
  ComplexOperator prev_best;
  double delta = INFINITY;
  int level = 0;
  for (std::uint64_t r = 1; r <= max_steps; r *= 2, ++level) {
    std::vector<ComplexOperator> row;
    row.push_back(product_formula(generator, t, r));
    const int depth = std::min<int>(level, kMaxExtrapolationDepth);
    for (int k = 1; k <= depth; ++k) {
      const double f = std::ldexp(1.0, k) - 1.0;
      row.push_back(row[k - 1] + (row[k - 1] - prev_row[k - 1]) / f);
    }
    const ComplexOperator& best = row.back();
    if (level > 0) {
      delta = spectral_norm(best - prev_best);
      if (level + 1 >= kMinLevels && delta < tol) {
        return {nearest_unitary(best), delta, r};
      }
    }
    prev_best = best;
    prev_row = std::move(row);
  }
  throw ConvergenceError("exact_propagator: no convergence within the step limit", delta);
}

ComplexOperator exact_propagator(const HamiltonianFunction& generator, double t,
                                 double tol) {
  return exact_propagator_detailed(generator, t, tol).U;
}

}  // namespace dysonsim
