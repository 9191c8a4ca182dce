// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dysonsim/core/operation.hpp"

namespace dysonsim {

/// Registers of `layout` not listed in `ancillas`, in layout order.
std::vector<std::string> complement_registers(const RegisterLayout& layout,
                                              const std::vector<std::string>& ancillas);

/// Applies `circuit` to |0>_ancillas |basis_index>_rest and returns the full
/// output state. basis_index is packed over the non-ancilla registers in
/// layout order (first register least significant).
StateVector apply_block_column(const Operation& circuit, const RegisterLayout& layout,
                               const std::vector<std::string>& ancillas,
                               std::uint64_t basis_index);

/// Rows of `state` with every ancilla register zero, packed over the
/// non-ancilla registers.
StateVector project_ancillas_zero(const StateVector& state, const RegisterLayout& layout,
                                  const std::vector<std::string>& ancillas);

/// (<0|_anc (x) I) circuit (|0>_anc (x) I), assembled column by column.
/// The non-ancilla part must be at most tol::kDenseQubits qubits.
ComplexOperator extract_block(const Operation& circuit, const RegisterLayout& layout,
                              const std::vector<std::string>& ancillas);

/// Block on `system` with register `reg` held at `value` on input and output
/// and every other register zero on both sides.
ComplexOperator block_at_register(const Operation& circuit, const RegisterLayout& layout,
                                  const std::string& system, const std::string& reg,
                                  std::uint64_t value);

/// Largest amplitude the circuit sends from reg = value (others zero) to any
/// reg != value with the other registers zero.
double register_leakage(const Operation& circuit, const RegisterLayout& layout,
                        const std::string& system, const std::string& reg,
                        std::uint64_t value);

}  // namespace dysonsim
