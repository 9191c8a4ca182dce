// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dysonsim/core/operation.hpp"
#include "dysonsim/core/register_layout.hpp"
#include "dysonsim/encoding/block_encoding.hpp"

namespace dysonsim {

/// Counter registers of the compression gadget and the map between logical
/// product length k and the physical counter value that selects it.
struct CompressionLayout {
  int K = 0;
  int n_b = 1;
  int n_c = 0;
  std::string b = "b";
  std::string c = "c";
  /// Registers that must be zero for a step to count as a success.
  std::vector<std::string> flags;

  /// Counter value whose sector holds H_k ... H_1: k - 1 mod 2^n_b.
  std::uint64_t physical(int k) const;
  /// Inverse of physical on {0..K}; -1 elsewhere.
  int logical(std::uint64_t value) const;
};

/// n_b = ceil(log2(K + 1)) + 1 and n_c = n_b - 1.
CompressionLayout make_compression_layout(int K, std::vector<std::string> flags,
                                          std::string b = "b", std::string c = "c");

/// |l> -> |l + increment mod 2^qubits> on `reg`.
OperationPtr modular_adder(const std::string& reg, int qubits, std::int64_t increment);

/// Decrements b when every flag register is zero, else decrements c.
OperationPtr controlled_success_adder(const CompressionLayout& cl);

/// Block encoding of the strictly upper triangular M x M matrix with entries
/// 1/M, on register d with ancillas e (log2 M qubits) and f (one qubit).
BlockEncoding comparator_lt_encoding(std::uint64_t M, const std::string& d = "d",
                                     const std::string& e = "e", const std::string& f = "f");

/// Circuit whose zero-projected block is sum_k |physical(k)><physical(k)|_b
/// (x) H_k ... H_1, where the listed registers are projected onto zero.
struct CompressedProduct {
  RegisterLayout layout;
  OperationPtr circuit;
  CompressionLayout compression;
  std::string system = "s";
  /// Registers projected onto zero when reading a sector (flags, c, ...).
  std::vector<std::string> projected;
};

/// Applies steps[k-1] = U_k in order, each controlled on the leading bits of
/// b and c being zero and followed by the success adder, then adds K to b.
/// Every step must act on `layout`; `flags` are their ancilla registers.
CompressedProduct compression_gadget(const std::vector<OperationPtr>& steps,
                                     const RegisterLayout& layout, const std::string& system,
                                     const std::vector<std::string>& flags);

/// Convenience form for K block encodings sharing one system register.
CompressedProduct compression_gadget(const std::vector<BlockEncoding>& encodings);

/// Logical sector k of a compressed product.
ComplexOperator sector_block(const CompressedProduct& g, int k);

/// Largest amplitude moved out of counter value physical(k), other
/// registers zero; zero when the counter is restored.
double sector_leakage(const CompressedProduct& g, int k);

/// Unitary on b whose first column places amplitudes[k] on physical(k).
OperationPtr coef_prep(const std::vector<Complex>& amplitudes, const CompressionLayout& cl);

/// Compressed Dyson sum: sector k holds B_k / (alpha M)^k on the system.
CompressedProduct dys_k(const TimeIndexedBlockEncoding& ham_t, int K,
                        const std::string& e = "e", const std::string& f = "f");

/// Lowers the overlap of an encoding with normalization beta' <= 2 to
/// exactly 1/2 with an Ry(2 theta) rotation, cos theta = beta'/2, on a fresh
/// ancilla qubit.
BlockEncoding pad_to_half(const BlockEncoding& enc, const std::string& pad = "p");

/// One round -V REF V^+ REF V on an encoding with normalization 2. The block
/// becomes 3X - 4XX^+X for input block X.
BlockEncoding robust_oaa(const BlockEncoding& enc);

/// Dense counterpart of robust_oaa: 3X - 4XX^+X.
ComplexOperator oaa_block(const ComplexOperator& x);

}  // namespace dysonsim
