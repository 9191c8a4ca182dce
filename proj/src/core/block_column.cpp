// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/core/block_column.hpp"

#include <algorithm>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {

std::vector<std::string> complement_registers(const RegisterLayout& layout,
                                              const std::vector<std::string>& ancillas) {
  for (const auto& a : ancillas) {
    if (!layout.contains(a)) {
      throw InvalidArgument("ancilla register '" + a + "' missing from layout " +
                            layout.describe());
    }
  }
  std::vector<std::string> rest;
  for (const auto& r : layout.registers()) {
    if (std::find(ancillas.begin(), ancillas.end(), r.name) == ancillas.end()) {
      rest.push_back(r.name);
    }
  }
  return rest;
}

StateVector apply_block_column(const Operation& circuit, const RegisterLayout& layout,
                               const std::vector<std::string>& ancillas,
                               std::uint64_t basis_index) {
  const auto rest = complement_registers(layout, ancillas);
  const int n = layout.qubits_of(rest);
  if (basis_index >= (std::uint64_t{1} << n)) {
    throw InvalidArgument("apply_block_column: basis index " +
                          std::to_string(basis_index) + " out of range for " +
                          std::to_string(n) + " system qubits");
  }
  require_support(circuit, layout);
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
  psi[static_cast<Eigen::Index>(layout.deposit_all(0, rest, basis_index))] = 1.0;
  circuit.apply(psi, layout);
  return psi;
}

StateVector project_ancillas_zero(const StateVector& state, const RegisterLayout& layout,
                                  const std::vector<std::string>& ancillas) {
  const auto rest = complement_registers(layout, ancillas);
  const auto n = static_cast<Eigen::Index>(std::uint64_t{1} << layout.qubits_of(rest));
  StateVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = state[static_cast<Eigen::Index>(layout.deposit_all(0, rest, i))];
  }
  return out;
}

ComplexOperator extract_block(const Operation& circuit, const RegisterLayout& layout,
                              const std::vector<std::string>& ancillas) {
  const auto rest = complement_registers(layout, ancillas);
  const int n = layout.qubits_of(rest);
  if (n > tol::kDenseQubits) {
    throw BudgetExceeded("extract_block: encoded block too large", n, tol::kDenseQubits);
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  ComplexOperator block(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    block.col(j) = project_ancillas_zero(
        apply_block_column(circuit, layout, ancillas, static_cast<std::uint64_t>(j)),
        layout, ancillas);
  }
  return block;
}

ComplexOperator block_at_register(const Operation& circuit, const RegisterLayout& layout,
                                  const std::string& system, const std::string& reg,
                                  std::uint64_t value) {
  const auto& sys = layout.at(system);
  if (value >= layout.at(reg).dimension()) {
    throw InvalidArgument("block_at_register: value out of range for register '" + reg + "'");
  }
  if (sys.qubits > tol::kDenseQubits) {
    throw BudgetExceeded("block_at_register: system register too large for a dense block",
                         sys.qubits, tol::kDenseQubits);
  }
  const std::uint64_t ds = sys.dimension();
  const std::uint64_t fixed = layout.deposit(0, reg, value);
  ComplexOperator out(ds, ds);
  for (std::uint64_t j = 0; j < ds; ++j) {
    StateVector psi = StateVector::Zero(layout.dimension());
    psi[layout.deposit(fixed, system, j)] = 1.0;
    circuit.apply(psi, layout);
    for (std::uint64_t i = 0; i < ds; ++i) out(i, j) = psi[layout.deposit(fixed, system, i)];
  }
  return out;
}

double register_leakage(const Operation& circuit, const RegisterLayout& layout,
                        const std::string& system, const std::string& reg,
                        std::uint64_t value) {
  const auto& sys = layout.at(system);
  const auto& r = layout.at(reg);
  double worst = 0.0;
  for (std::uint64_t j = 0; j < sys.dimension(); ++j) {
    StateVector psi = StateVector::Zero(layout.dimension());
    psi[layout.deposit(layout.deposit(0, reg, value), system, j)] = 1.0;
    circuit.apply(psi, layout);
    for (std::uint64_t v = 0; v < r.dimension(); ++v) {
      if (v == value) continue;
      for (std::uint64_t i = 0; i < sys.dimension(); ++i) {
        worst = std::max(worst, std::abs(psi[layout.deposit(layout.deposit(0, reg, v), system, i)]));
      }
    }
  }
  return worst;
}

}  // namespace dysonsim
