// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// Largest number of fermionic modes for which dense Fock-space operators
/// are built.
inline constexpr int kMaxDenseModes = 12;

struct ModeOperators {
  ComplexOperator creation;
  ComplexOperator annihilation;
};

/// Jordan-Wigner creation and annihilation operators on 2^n_modes
/// dimensional Fock space. Mode j is qubit j (bit j of the basis index, 1 =
/// occupied) and carries a Z string on modes 0..j-1.
std::vector<ModeOperators> jordan_wigner_operators(int n_modes);

/// Diagonal of the number operator n_j = a_j^dag a_j, as occupation values.
Eigen::VectorXd occupation(int n_modes, int mode);

/// Total number operator.
ComplexOperator total_number_operator(int n_modes);

}  // namespace dysonsim
