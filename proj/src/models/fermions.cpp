// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/models/fermions.hpp"

#include <bit>
#include <string>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"

namespace dysonsim {
namespace {

void require_modes(int n_modes) {
  if (n_modes < 1) throw InvalidArgument("need at least one fermionic mode");
  if (n_modes > kMaxDenseModes) {
    throw BudgetExceeded("Fock space of " + std::to_string(n_modes) +
                             " modes exceeds the dense budget",
                         n_modes, kMaxDenseModes);
  }
}

}  // namespace

std::vector<ModeOperators> jordan_wigner_operators(int n_modes) {
  require_modes(n_modes);
  ComplexOperator lower = ComplexOperator::Zero(2, 2);
  lower(0, 1) = 1.0;
  std::vector<ModeOperators> out;
  out.reserve(n_modes);
  for (int j = 0; j < n_modes; ++j) {
    // Qubit n_modes-1 is the most significant Kronecker factor.
    std::vector<ComplexOperator> factors;
    for (int q = n_modes - 1; q >= 0; --q) {
      if (q > j) {
        factors.push_back(pauli::identity());
      } else if (q == j) {
        factors.push_back(lower);
      } else {
        factors.push_back(pauli::z());
      }
    }
    ComplexOperator a = kron_all(factors);
    out.push_back({a.adjoint(), std::move(a)});
  }
  return out;
}

Eigen::VectorXd occupation(int n_modes, int mode) {
  require_modes(n_modes);
  if (mode < 0 || mode >= n_modes) throw InvalidArgument("mode index out of range");
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Eigen::VectorXd n(dim);
  for (Eigen::Index i = 0; i < dim; ++i) n[i] = static_cast<double>((i >> mode) & 1);
  return n;
}

ComplexOperator total_number_operator(int n_modes) {
  require_modes(n_modes);
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  ComplexOperator n = ComplexOperator::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    n(i, i) = static_cast<double>(std::popcount(static_cast<std::uint64_t>(i)));
  }
  return n;
}

}  // namespace dysonsim
