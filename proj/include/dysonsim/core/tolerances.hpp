// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace dysonsim::tol {

/// Inputs flagged Hermitian must satisfy ||H - H^dag||_max <= this, relative
/// to max(1, ||H||_max).
inline constexpr double kHermitianInput = 1e-12;

/// Outputs flagged unitary must satisfy ||U^dag U - I||_max <= this.
inline constexpr double kUnitaryOutput = 1e-10;

/// Eigenvalues of a PSD input above -kPsdClamp are clamped to zero; below
/// -kPsdReject the input is rejected.
inline constexpr double kPsdClamp = 1e-12;
inline constexpr double kPsdReject = 1e-8;

/// Relative safety factor applied to numerically measured norm bounds.
inline constexpr double kAlphaHeadroom = 1e-6;

/// Dense operators are limited to 2^kDenseQubits rows.
inline constexpr int kDenseQubits = 12;

/// Default state-vector budget for matrix-free circuits.
inline constexpr int kDefaultMaxQubits = 26;

/// Largest circuit the automatic backend runs before switching to block algebra.
inline constexpr int kAutoCircuitQubits = 22;

}  // namespace dysonsim::tol
