// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace dysonsim {

using Complex = std::complex<double>;

/// Dense square matrix of complex amplitudes. Carries Hamiltonians, unitaries
/// and extracted blocks alike.
using ComplexOperator = Eigen::MatrixXcd;

/// Amplitudes of a (possibly multi-register) state in the computational basis.
using StateVector = Eigen::VectorXcd;

/// A Hamiltonian that depends on time.
using HamiltonianFunction = std::function<ComplexOperator(double)>;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace dysonsim
