// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// Periodic Hubbard model with site disorder and translation-invariant
/// density couplings. Coefficients are indexed by the lattice displacement
/// s = (x - y) mod N. Spin index 0 is sigma = +1 and 1 is sigma = -1.
struct HubbardSpec {
  int N = 0;
  int dims = 1;
  std::vector<double> T;
  std::vector<std::array<double, 2>> U;
  std::vector<double> V;
};

struct HubbardParts {
  int n_modes = 0;
  ComplexOperator total;
  ComplexOperator kinetic;
  ComplexOperator onsite;
  ComplexOperator interaction;
};

/// Jordan-Wigner mode of site x with spin index `spin`:
/// f(x, sigma) = N (1 - sigma) / 2 + x.
int hubbard_mode(int N, int x, int spin);

/// Checks sizes, finiteness, T(s) = T(-s) (Hermiticity) and V(s) = V(-s).
void validate_hubbard(const HubbardSpec& spec);

/// Fock-space operators T, U, V and their sum. Limited to 2N <= 12 modes and
/// one spatial dimension.
HubbardParts build_hubbard(const HubbardSpec& spec);

/// a_i^dag a_j in the Jordan-Wigner occupation basis, built from bit
/// arithmetic.
ComplexOperator hopping_operator(int n_modes, int i, int j);

/// Single-particle hopping matrix T(x - y), N x N.
ComplexOperator kinetic_matrix(const HubbardSpec& spec);

/// T~(p) = sum_s T(s) exp(i 2 pi p s / N).
Eigen::VectorXcd kinetic_dispersion(const HubbardSpec& spec);

/// V~(k) = sum_x V(x) exp(i 2 pi x k / N).
Eigen::VectorXcd potential_fourier(const HubbardSpec& spec);

/// F with F(x, p) = exp(-i 2 pi p x / N) / sqrt(N); F^dag T F is diagonal.
ComplexOperator dft_matrix(int N);

/// Builds V from its defining double sum and from the Fourier form
/// sum_k V~(k) chi_k chi_k^dag - V(0) sum n, returning ||LHS - RHS||_max.
double fourier_potential_identity_check(const HubbardSpec& spec);

}  // namespace dysonsim
