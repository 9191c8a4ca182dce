// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/gadgets/simulation.hpp"

namespace dysonsim {
namespace {

constexpr int kMaxTaylorOrder = 64;

}  // namespace

int tts_truncation_order(double alpha_t, double eps) {
  if (!(alpha_t >= 0.0) || !std::isfinite(alpha_t)) {
    throw InvalidArgument("tts_truncation_order: alpha t must be finite and >= 0");
  }
  if (!(eps > 0.0)) throw InvalidArgument("tts_truncation_order: eps must be positive");
  // term = (alpha t)^{K+1} / (K+1)!
  double term = alpha_t;
  for (int K = 0; K <= kMaxTaylorOrder; ++K) {
    if (2.0 * term <= eps) return K;
    term *= alpha_t / static_cast<double>(K + 2);
  }
  throw InvalidArgument("tts_truncation_order: no order up to 64 reaches eps");
}

TtsResult tts_step(const BlockEncoding& enc, double t, double eps, const EvolveOptions& options) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("tts_step: t must be >= 0");
  const double x = enc.alpha * t;
  if (x > std::numbers::ln2 * (1.0 + 1e-12)) {
    throw InvalidArgument("tts_step: alpha t exceeds ln 2; split the evolution");
  }
  TtsResult out;
  out.K = tts_truncation_order(x, eps);
  auto counter = std::make_shared<QueryCounter>();
  const OperationPtr counted = std::make_shared<Instrumented>(enc.circuit, counter);
  const OperationPtr phase = std::make_shared<GlobalPhase>(Complex(0.0, -1.0));
  std::vector<OperationPtr> steps(out.K, sequence({counted, phase}));
  auto gadget = compression_gadget(steps, enc.layout, enc.system, enc.ancillas);
  const auto& cl = gadget.compression;
  std::vector<double> w(out.K + 1);
  double beta = 0.0;
  double term = 1.0;
  for (int k = 0; k <= out.K; ++k) {
    w[k] = term;
    beta += term;
    term *= x / static_cast<double>(k + 1);
  }
  std::vector<Complex> amps;
  for (int k = 0; k <= out.K; ++k) amps.emplace_back(std::sqrt(w[k] / beta), 0.0);
  out.beta_prime = beta;
  const auto prep = coef_prep(amps, cl);
  BlockEncoding lcu;
  lcu.layout = gadget.layout;
  lcu.circuit = sequence({prep, gadget.circuit, adjoint(prep)});
  lcu.alpha = beta;
  lcu.system = gadget.system;
  lcu.ancillas = gadget.projected;
  lcu.ancillas.push_back(cl.b);
  const BlockEncoding amplified = robust_oaa(pad_to_half(lcu));
  out.qubits = amplified.layout.total_qubits();
  const int budget = options.max_qubits > 0 ? options.max_qubits : max_circuit_qubits();
  const bool fits = out.qubits <= budget && enc.system_qubits() <= tol::kDenseQubits;
  const bool automatic_dense = options.backend == Backend::automatic &&
                               (!fits || out.qubits > tol::kAutoCircuitQubits);
  if (options.backend == Backend::block_algebra || automatic_dense) {
    // Dense counterpart with the same K and normalization.
    const ComplexOperator h = enc.alpha * extract_block(enc);
    ComplexOperator s = ComplexOperator::Identity(h.rows(), h.cols());
    ComplexOperator p = s;
    for (int k = 1; k <= out.K; ++k) {
      p = (Complex(0.0, -t) / static_cast<double>(k)) * h * p;
      s += p;
    }
    out.U = oaa_block(0.5 * s);
    out.queries = 3 * out.K;
    out.backend = backend_name(Backend::block_algebra);
    return out;
  }
  if (!fits) throw BudgetExceeded("tts_step: circuit exceeds the qubit budget", out.qubits, budget);
  counter->reset();
  out.U = extract_block(amplified);
  const std::int64_t cols = out.U.cols();
  out.queries = counter->count() / cols;
  out.counted = true;
  out.backend = backend_name(Backend::circuit);
  return out;
}

TtsResult tts_evolve(const BlockEncoding& enc, double t, double eps,
                     const EvolveOptions& options) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("tts_evolve: t must be >= 0");
  if (!(eps > 0.0)) throw InvalidArgument("tts_evolve: eps must be positive");
  const double x = enc.alpha * t;
  const auto r = static_cast<std::uint64_t>(
      std::max(1.0, std::ceil(x / std::numbers::ln2 - 1e-12)));
  const double dt = t / static_cast<double>(r);
  TtsResult step = tts_step(enc, dt, eps / static_cast<double>(r), options);
  TtsResult out = step;
  out.segments = r;
  out.U = ComplexOperator::Identity(step.U.rows(), step.U.cols());
  for (std::uint64_t j = 0; j < r; ++j) out.U = step.U * out.U;
  out.queries = step.queries * static_cast<std::int64_t>(r);
  return out;
}

}  // namespace dysonsim
