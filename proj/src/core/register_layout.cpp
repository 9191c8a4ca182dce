// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/core/register_layout.hpp"

#include <algorithm>
#include <sstream>

#include "dysonsim/core/error.hpp"

namespace dysonsim {

RegisterLayout& RegisterLayout::add(std::string name, int qubits) {
  if (qubits < 0) {
    throw InvalidArgument("register '" + name + "' has negative size");
  }
  if (contains(name)) {
    throw InvalidArgument("duplicate register name '" + name + "'");
  }
  if (total_qubits_ + qubits > 62) {
    throw InvalidArgument("register layout exceeds 62 qubits");
  }
  registers_.push_back({std::move(name), qubits, total_qubits_});
  total_qubits_ += qubits;
  return *this;
}

bool RegisterLayout::contains(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

const RegisterLayout::Register& RegisterLayout::at(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw InvalidArgument("unknown register '" + std::string(name) + "'");
}

std::vector<std::string> RegisterLayout::names() const {
  std::vector<std::string> out;
  out.reserve(registers_.size());
  for (const auto& r : registers_) out.push_back(r.name);
  return out;
}

int RegisterLayout::qubits_of(std::span<const std::string> names) const {
  int n = 0;
  for (const auto& name : names) n += at(name).qubits;
  return n;
}

std::uint64_t RegisterLayout::mask_of(std::span<const std::string> names) const {
  std::uint64_t m = 0;
  for (const auto& name : names) m |= at(name).mask();
  return m;
}

std::uint64_t RegisterLayout::extract_all(
    std::uint64_t index, std::span<const std::string> names) const {
  std::uint64_t packed = 0;
  int shift = 0;
  for (const auto& name : names) {
    const auto& r = at(name);
    packed |= ((index & r.mask()) >> r.offset) << shift;
    shift += r.qubits;
  }
  return packed;
}

std::uint64_t RegisterLayout::deposit_all(std::uint64_t index,
                                          std::span<const std::string> names,
                                          std::uint64_t packed) const {
  int shift = 0;
  for (const auto& name : names) {
    const auto& r = at(name);
    const std::uint64_t value = (packed >> shift) & ((std::uint64_t{1} << r.qubits) - 1);
    index = (index & ~r.mask()) | (value << r.offset);
    shift += r.qubits;
  }
  return index;
}

RegisterLayout RegisterLayout::merged_with(const RegisterLayout& other) const {
  RegisterLayout out = *this;
  for (const auto& r : other.registers()) {
    if (out.contains(r.name)) {
      if (out.at(r.name).qubits != r.qubits) {
        throw InvalidArgument("register '" + r.name +
                              "' has conflicting sizes in merged layouts");
      }
      continue;
    }
    out.add(r.name, r.qubits);
  }
  return out;
}

std::string RegisterLayout::describe() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (i) os << ", ";
    os << registers_[i].name << ":" << registers_[i].qubits;
  }
  os << "] total=" << total_qubits_;
  return os.str();
}

}  // namespace dysonsim
