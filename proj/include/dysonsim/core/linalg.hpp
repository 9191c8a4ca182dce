// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// Largest entry magnitude, ||A||_max.
double max_abs(const ComplexOperator& a);

/// ||A - A^dag||_max.
double hermiticity_defect(const ComplexOperator& a);

/// ||U^dag U - I||_max.
double unitarity_defect(const ComplexOperator& u);

bool all_finite(const ComplexOperator& a);

/// Throws InvalidArgument unless `a` is square, finite and Hermitian to
/// tol::kHermitianInput (scaled by max(1, ||a||_max)). `what` names the
/// operand in the diagnostic.
void require_hermitian(const ComplexOperator& a, const char* what);

/// e^{-i theta H} for Hermitian H, computed from the eigendecomposition of H.
/// This is the reference exponential used throughout the library.
ComplexOperator matrix_exponential(const ComplexOperator& h, double theta);

/// Hermitian S with S*S = P for Hermitian positive semidefinite P. Eigenvalues
/// in [-tol::kPsdReject, 0) are clamped to zero.
ComplexOperator hermitian_psd_sqrt(const ComplexOperator& p);

/// Unitary whose first column is the unit vector `v`: a phased Householder
/// reflection. Returns the identity when v is already |0>.
ComplexOperator unitary_with_first_column(const StateVector& v);

/// Largest singular value.
double spectral_norm(const ComplexOperator& a);

ComplexOperator kron(const ComplexOperator& a, const ComplexOperator& b);

/// Kronecker product of a list; the first factor is the most significant.
ComplexOperator kron_all(std::span<const ComplexOperator> factors);

namespace pauli {
ComplexOperator identity(std::int64_t dim = 2);
ComplexOperator x();
ComplexOperator y();
ComplexOperator z();

/// Pauli string such as "XZ"; the leftmost letter acts on the most significant
/// qubit.
ComplexOperator from_string(std::string_view word);
}  // namespace pauli

/// Smallest power of two >= n (n >= 1).
std::uint64_t next_power_of_two(std::uint64_t n);

/// ceil(log2(n)) for n >= 1.
int ceil_log2(std::uint64_t n);

bool is_power_of_two(std::uint64_t n);

}  // namespace dysonsim
