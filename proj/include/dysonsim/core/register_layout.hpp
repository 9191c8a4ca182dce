// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dysonsim {

/// Named qubit registers packed little-endian into a basis index. The first
/// register added occupies the least significant bits.
class RegisterLayout {
 public:
  struct Register {
    std::string name;
    int qubits = 0;
    int offset = 0;

    std::uint64_t dimension() const { return std::uint64_t{1} << qubits; }
    std::uint64_t mask() const {
      return ((std::uint64_t{1} << qubits) - 1) << offset;
    }
  };

  RegisterLayout() = default;

  /// Appends a register. Names must be unique; zero-qubit registers are
  /// allowed and have dimension one.
  RegisterLayout& add(std::string name, int qubits);

  bool contains(std::string_view name) const;
  const Register& at(std::string_view name) const;
  std::span<const Register> registers() const { return registers_; }
  std::vector<std::string> names() const;

  int total_qubits() const { return total_qubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << total_qubits_; }

  /// Combined qubit count of a subset of registers.
  int qubits_of(std::span<const std::string> names) const;

  /// Bit mask covering a subset of registers.
  std::uint64_t mask_of(std::span<const std::string> names) const;

  std::uint64_t extract(std::uint64_t index, std::string_view name) const {
    const auto& r = at(name);
    return (index & r.mask()) >> r.offset;
  }

  std::uint64_t deposit(std::uint64_t index, std::string_view name,
                        std::uint64_t value) const {
    const auto& r = at(name);
    return (index & ~r.mask()) | ((value << r.offset) & r.mask());
  }

  /// Packs the values of `names` (first name least significant) out of a
  /// basis index.
  std::uint64_t extract_all(std::uint64_t index,
                            std::span<const std::string> names) const;

  /// Inverse of extract_all: writes a packed value into the listed registers.
  std::uint64_t deposit_all(std::uint64_t index,
                            std::span<const std::string> names,
                            std::uint64_t packed) const;

  /// Layout consisting of this layout's registers followed by `other`'s
  /// registers that are not already present. Shared names must agree on
  /// qubit count.
  RegisterLayout merged_with(const RegisterLayout& other) const;

  std::string describe() const;

 private:
  std::vector<Register> registers_;
  int total_qubits_ = 0;
};

}  // namespace dysonsim
