// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dysonsim/encoding/block_encoding.hpp"
#include "dysonsim/gadgets/gadgets.hpp"
#include "dysonsim/models/sparse.hpp"

namespace dysonsim {

/// Parameters of one truncated-Dyson segment.
struct TdsSegmentPlan {
  int K = 0;
  std::uint64_t M = 1;
  double tau = 0.0;
  double alpha = 1.0;
  /// sum_{k<=K} (alpha tau)^k, the normalization before padding.
  double beta_prime = 1.0;
  /// Normalization after padding; always 2.
  double beta = 2.0;
  /// (-i)^k sqrt((alpha tau)^k / beta') on the input side.
  std::vector<Complex> coef;
  /// sqrt((alpha tau)^k / beta') on the output side.
  std::vector<Complex> coef_prime;
  /// Padding rotation angle, arccos(beta' / 2).
  double theta = 0.0;
};

/// Throws InvalidArgument when beta' > 2 or K > M.
TdsSegmentPlan make_tds_plan(double alpha, double tau, int K, std::uint64_t M);

struct TdsSegment {
  /// Amplified segment: block approximates the segment propagator.
  BlockEncoding encoding;
  CompressionLayout compression;
};

/// -W REF W^+ REF W with W = pad(COEF'^+ DYS_K COEF). Uses the HAM-T three
/// times per application, so 3K queries.
TdsSegment tds_segment(const TimeIndexedBlockEncoding& ham_t, const TdsSegmentPlan& plan);
TdsSegment tds_segment(const InstrumentedOracle& ham_t, const TdsSegmentPlan& plan);

/// Dense counterpart of tds_segment for samples H(m tau / M): the amplified
/// block 3X - 4XX^+X with X = (1/2) sum_k (-i tau/M)^k B_k.
ComplexOperator tds_block_algebra(const std::vector<ComplexOperator>& samples, double tau,
                                  int K);

/// Qubits of the segment circuit: system, HAM-T ancilla, counters b and c,
/// time registers d and e, comparator flag f and padding qubit p.
int tds_layout_qubits(int n_s, int n_a, int K, std::uint64_t M);

enum class Backend { automatic, circuit, block_algebra };

const char* backend_name(Backend b);

/// Qubit budget for circuit backends: DYSONSIM_MAX_QUBITS if set, else the
/// library default.
int max_circuit_qubits();

struct EvolveOptions {
  Backend backend = Backend::automatic;
  /// Zero means max_circuit_qubits().
  int max_qubits = 0;
  /// Accept eps above 2^{1-e}; the record is then marked not bound-backed.
  bool allow_unbacked = false;
};

struct ResourceRecord {
  std::string picture;
  std::string backend;
  std::uint64_t L = 0;
  int K = 0;
  std::uint64_t M = 0;
  double tau = 0.0;
  double beta_prime = 0.0;
  double alpha = 0.0;
  double alpha_A = 0.0;
  double alpha_B = 0.0;
  double avg_deriv = 0.0;
  std::int64_t queries_ham_t = 0;
  std::int64_t queries_eA = 0;
  /// Oracle calls spent on e^{-iA tau}: 2 per application when fast-forwarded.
  std::int64_t queries_eA_oracle = 0;
  int qubits = 0;
  bool bound_backed = true;
  /// True when queries_ham_t comes from instrumented counters.
  bool counted = false;
};

struct EvolveResult {
  ComplexOperator U;
  ResourceRecord resources;
};

/// Schrodinger-picture simulation by L truncated-Dyson segments with
/// per-segment error eps / L.
EvolveResult multi_segment_evolve(const HamiltonianFunction& generator, double t, double eps,
                                  const EvolveOptions& options = {});

/// Interaction-picture simulation of H = A + B: each segment is e^{-iA tau}
/// after the truncated Dyson series of e^{iAs} B e^{-iAs}. When
/// `diagonal_a` is given, e^{-iA tau} comes from diagonal fast-forwarding.
EvolveResult interaction_evolve(const ComplexOperator& a, const ComplexOperator& b, double t,
                                double eps, const EvolveOptions& options = {},
                                const SparseHamiltonianSpec* diagonal_a = nullptr);

/// Simulation of a time-independent sparse model through the sparse HAM-T.
EvolveResult sparse_evolve(const SparseHamiltonianSpec& spec, double t, double eps,
                           const EvolveOptions& options = {});

/// Smallest K with 2 (alpha t)^{K+1} / (K+1)! <= eps.
int tts_truncation_order(double alpha_t, double eps);

struct TtsResult {
  ComplexOperator U;
  int K = 0;
  std::uint64_t segments = 1;
  double beta_prime = 1.0;
  int qubits = 0;
  std::int64_t queries = 0;
  std::string backend;
  bool counted = false;
};

/// One compressed truncated-Taylor step e^{-iHt} with alpha t <= ln 2:
/// every gadget step applies -i times the encoding, COEF amplitudes are
/// sqrt((alpha t)^k / k! / beta'), then padding and amplification.
TtsResult tts_step(const BlockEncoding& enc, double t, double eps,
                   const EvolveOptions& options = {});

/// ceil(alpha t / ln 2) Taylor steps with error eps / r each.
TtsResult tts_evolve(const BlockEncoding& enc, double t, double eps,
                     const EvolveOptions& options = {});

}  // namespace dysonsim
