// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// Closed-form cost of one simulation strategy. Counts are exact internal
/// formulas and match the instrumented counters of a built circuit.
struct ResourceEstimate {
  std::string picture;
  double alpha_A = 0.0;
  double alpha_B = 0.0;
  double t = 0.0;
  double eps = 0.0;
  std::uint64_t L = 0;
  int K = 0;
  std::uint64_t M = 0;
  double tau = 0.0;
  /// Pre-padding normalization sum_k (alpha tau)^k (or the Taylor sum).
  double beta = 0.0;
  std::int64_t queries_ham_t = 0;
  std::int64_t queries_eA = 0;
  int qubits = 0;
  bool bound_backed = true;
  std::string bound_source;
  std::vector<std::string> notes;
  /// Spectral-norm error against the exact propagator, when simulated.
  std::optional<double> achieved_error;
};

/// Register sizes of the encodings fed to an estimate.
struct EncodingShape {
  int system_qubits = 1;
  int ancilla_qubits = 1;
};

/// Schrodinger-picture truncated Dyson series over L = ceil(2 alpha t)
/// segments, per-segment error eps / L.
ResourceEstimate estimate_tds(double alpha, double t, double eps, double avg_deriv,
                              double max_norm, EncodingShape shape = {});

/// Interaction-picture truncated Dyson series for H = A + B with L =
/// ceil(2 alpha_B t) segments and one e^{-iA tau} per segment.
ResourceEstimate estimate_interaction(double alpha_A, double alpha_B, double t, double eps,
                                      EncodingShape shape = {});

/// Time-independent d-sparse model: alpha = d Hmax, ancilla n_s + 2 qubits.
ResourceEstimate estimate_sparse(int d, double Hmax, int system_qubits, double t, double eps);

/// Compressed truncated Taylor series on the encoding of A + B: ceil(alpha t
/// / ln 2) steps, each with error eps / steps.
ResourceEstimate estimate_tts(double alpha, double t, double eps, EncodingShape shape = {});

/// Split Hamiltonian for a picture comparison. When both matrices are set
/// and small, comparison rows carry achieved errors.
struct PictureModel {
  double alpha_A = 0.0;
  double alpha_B = 0.0;
  EncodingShape shape;
  std::optional<ComplexOperator> A;
  std::optional<ComplexOperator> B;
};

/// Rows schrodinger_tts, schrodinger_tds and interaction_tds.
std::vector<ResourceEstimate> compare_pictures(const PictureModel& model, double t, double eps,
                                               bool simulate = false);

/// Column names of the estimate CSV.
const std::vector<std::string>& estimate_csv_columns();

/// Shortest round-trip decimal form of a double.
std::string format_number(double value);

/// One CSV line (no trailing newline) in estimate_csv_columns order.
std::string estimate_csv_row(const ResourceEstimate& e);

}  // namespace dysonsim
