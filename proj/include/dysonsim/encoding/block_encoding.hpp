// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dysonsim/core/operation.hpp"
#include "dysonsim/core/register_layout.hpp"
#include "dysonsim/core/types.hpp"
#include "dysonsim/models/sampled_hamiltonian.hpp"
#include "dysonsim/models/sparse.hpp"

namespace dysonsim {

/// Unitary `circuit` on `layout` with (<0|_anc (x) I) circuit (|0>_anc (x) I)
/// = H / alpha on the system register.
struct BlockEncoding {
  RegisterLayout layout;
  OperationPtr circuit;
  double alpha = 1.0;
  std::string system = "s";
  std::vector<std::string> ancillas;

  int system_qubits() const { return layout.at(system).qubits; }
};

/// Block encoding controlled by a time register: the block at time index m
/// is H(m tau / M) / alpha.
struct TimeIndexedBlockEncoding : BlockEncoding {
  std::string time = "d";
  std::uint64_t M = 1;
  double tau = 0.0;
};

/// Encoding whose oracle applications are tallied by `counter`.
struct InstrumentedOracle {
  TimeIndexedBlockEncoding encoding;
  std::shared_ptr<QueryCounter> counter;
};

/// Two-block dilation [[A, sqrt(I - AA^+)], [sqrt(I - A^+A), -A^+]] with
/// A = H / alpha. One ancilla qubit; H must have power-of-two dimension.
BlockEncoding unitary_completion(const ComplexOperator& h, double alpha,
                                 const std::string& system = "s",
                                 const std::string& ancilla = "a");

/// PREP^+ SEL PREP for sum_j a_j U_j. The list is padded with identities of
/// zero weight up to a power of two.
BlockEncoding lcu_encode(const std::vector<double>& coeffs,
                         const std::vector<ComplexOperator>& unitaries,
                         const std::string& system = "s",
                         const std::string& ancilla = "a");

/// (<0|_anc (x) I) U (|0>_anc (x) I), scaled to the encoded operator's
/// normalization (i.e. the block itself, not block * alpha).
ComplexOperator extract_block(const BlockEncoding& enc);

/// Block on the system register at time index m.
ComplexOperator block_at(const TimeIndexedBlockEncoding& enc, std::uint64_t m);

/// Largest amplitude the circuit moves from time index m to any other time
/// index with ancillas zero. Zero for a proper time-indexed encoding.
double time_leakage(const TimeIndexedBlockEncoding& enc, std::uint64_t m);

/// Time-controlled direct sum of per-sample completions. Sample count is
/// padded to a power of two by repeating the final sample.
TimeIndexedBlockEncoding ham_t_from_samples(const SampledHamiltonian& hs,
                                            const std::string& system = "s",
                                            const std::string& ancilla = "a",
                                            const std::string& time = "d");

/// Interaction-picture HAM-T: block e^{iA tau m/M} B e^{-iA tau m/M} / alpha_B.
/// The counter tallies applications of encB.
InstrumentedOracle interaction_ham_t(const ComplexOperator& a, const BlockEncoding& enc_b,
                                     double tau, std::uint64_t M,
                                     const std::string& time = "d");

/// Wraps the whole circuit of `enc` with a query counter.
InstrumentedOracle instrument(const TimeIndexedBlockEncoding& enc);

/// Time-independent encoding viewed as HAM-T over M time indices: adds an
/// idle time register of log2(M) qubits.
TimeIndexedBlockEncoding as_time_indexed(const BlockEncoding& enc, double tau = 0.0,
                                         std::uint64_t M = 1,
                                         const std::string& time = "d");

struct SparseEncodingOptions {
  /// Fractional bits kept in each oracle value; negative keeps exact values.
  int precision_bits = -1;
  double tau = 0.0;
  /// Lower bound on the time-register size; indices past the model's time
  /// grid repeat its final point.
  std::uint64_t min_time_points = 1;
  std::string system = "s";
  std::string ancilla = "a";
  std::string time = "d";
};

/// U_row^+ U_col from the sparse entry and position oracles. Block at time
/// index m is H(m) / (d Hmax). The ancilla register holds n_s column qubits
/// and a 2-qubit flag (1 = column failure, 2 = row failure).
TimeIndexedBlockEncoding sparse_ham_t(const SparseHamiltonianSpec& spec,
                                      const SparseEncodingOptions& options = {});

struct DiagonalEvolution {
  ComplexOperator unitary;
  OperationPtr circuit;  // diagonal phases on the system register
  int queries = 0;
};

/// e^{-iAt} for diagonal A from entry-oracle values. Two queries per
/// application (compute and uncompute), independent of t.
DiagonalEvolution diagonal_fast_forward(const SparseHamiltonianSpec& spec, double t,
                                        std::uint64_t m = 0,
                                        const std::string& system = "s");

}  // namespace dysonsim
