// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
ComplexOperator random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Hermitian matrix scaled to spectral norm `norm`.
ComplexOperator random_hermitian(Eigen::Index dim, Rng& rng, double norm = 1.0);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase fix).
ComplexOperator random_unitary(Eigen::Index dim, Rng& rng);

/// Matrix with spectral norm exactly `norm` (<= 1 gives a contraction).
ComplexOperator random_scaled(Eigen::Index dim, Rng& rng, double norm);

/// Normalized random state.
StateVector random_state(Eigen::Index dim, Rng& rng);

double uniform(Rng& rng, double lo, double hi);

}  // namespace dysonsim
