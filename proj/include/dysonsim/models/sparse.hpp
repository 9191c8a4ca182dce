// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// A d-sparse Hamiltonian given by oracle callbacks. `position(m, row, j)`
/// returns the column of slot j < d in `row` at time index m, and
/// `entry(m, row, col)` its value. Slots of one row must name distinct
/// columns; unused slots point at columns whose entry is zero.
struct SparseHamiltonianSpec {
  using EntryFn = std::function<Complex(std::uint64_t, std::uint64_t, std::uint64_t)>;
  using PositionFn = std::function<std::uint64_t(std::uint64_t, std::uint64_t, int)>;

  std::uint64_t dim = 0;
  int d = 1;
  std::uint64_t time_points = 1;
  EntryFn entry;
  PositionFn position;
  double Hmax = 0.0;
};

/// Largest dimension that sparse_matrix_materialize accepts.
inline constexpr std::uint64_t kMaxSparseDim = 1024;

void validate_sparse(const SparseHamiltonianSpec& spec);

/// Dense H at time index m assembled only through the position and entry
/// callbacks. Rejects out-of-range or repeated columns and non-Hermitian
/// results, naming the offending (row, col).
ComplexOperator sparse_matrix_materialize(const SparseHamiltonianSpec& spec,
                                          std::uint64_t m);

/// Spec whose callbacks read from explicit matrices, one per time index.
/// Slot positions list the nonzero columns of each row in increasing order,
/// padded with the smallest unused columns. Hmax defaults to the largest
/// entry magnitude over all times.
SparseHamiltonianSpec sparse_from_matrices(std::vector<ComplexOperator> matrices, int d,
                                           double Hmax = -1.0);

/// Maximum number of nonzeros in any row of `h` (entries with |h_ij| > 0).
int row_sparsity(const ComplexOperator& h);

}  // namespace dysonsim
