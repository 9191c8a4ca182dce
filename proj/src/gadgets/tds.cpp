// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/dyson/dyson.hpp"
#include "dysonsim/gadgets/simulation.hpp"

namespace dysonsim {

TdsSegmentPlan make_tds_plan(double alpha, double tau, int K, std::uint64_t M) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("make_tds_plan: alpha must be positive and finite");
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidArgument("make_tds_plan: tau must be finite and >= 0");
  }
  if (K < 0) throw InvalidArgument("make_tds_plan: K must be >= 0");
  if (!is_power_of_two(M)) throw InvalidArgument("make_tds_plan: M must be a power of two");
  if (static_cast<std::uint64_t>(K) > M) {
    throw InvalidArgument("make_tds_plan: K = " + std::to_string(K) + " exceeds M = " +
                          std::to_string(M));
  }
  TdsSegmentPlan plan;
  plan.K = K;
  plan.M = M;
  plan.tau = tau;
  plan.alpha = alpha;
  const double x = alpha * tau;
  std::vector<double> w(K + 1);
  double beta = 0.0;
  for (int k = 0; k <= K; ++k) {
    w[k] = std::pow(x, k);
    beta += w[k];
  }
  if (beta > 2.0 * (1.0 + 1e-12)) {
    throw InvalidArgument("make_tds_plan: beta' = " + std::to_string(beta) +
                          " exceeds 2; shorten the segment");
  }
  plan.beta_prime = beta;
  Complex phase(1.0, 0.0);
  for (int k = 0; k <= K; ++k) {
    const double amp = std::sqrt(w[k] / beta);
    plan.coef.push_back(phase * amp);
    plan.coef_prime.emplace_back(amp, 0.0);
    phase *= Complex(0.0, -1.0);
  }
  plan.theta = std::acos(std::min(1.0, beta / 2.0));
  return plan;
}

TdsSegment tds_segment(const TimeIndexedBlockEncoding& ham_t, const TdsSegmentPlan& plan) {
  if (std::abs(ham_t.alpha - plan.alpha) > 1e-12 * std::max(1.0, plan.alpha)) {
    throw InvalidArgument("tds_segment: plan alpha does not match the HAM-T normalization");
  }
  if (ham_t.M != plan.M) {
    throw InvalidArgument("tds_segment: plan M does not match the HAM-T time register");
  }
  if (std::abs(plan.beta - 2.0) > 0.0) throw InvalidArgument("tds_segment: beta must be 2");
  auto dys = dys_k(ham_t, plan.K);
  const auto& cl = dys.compression;
  const auto coef = coef_prep(plan.coef, cl);
  const auto coef_prime = coef_prep(plan.coef_prime, cl);
  BlockEncoding lcu;
  lcu.layout = dys.layout;
  lcu.circuit = sequence({coef, dys.circuit, adjoint(coef_prime)});
  lcu.alpha = plan.beta_prime;
  lcu.system = dys.system;
  lcu.ancillas = dys.projected;
  lcu.ancillas.push_back(cl.b);
  TdsSegment seg;
  seg.encoding = robust_oaa(pad_to_half(lcu));
  seg.compression = cl;
  return seg;
}

TdsSegment tds_segment(const InstrumentedOracle& ham_t, const TdsSegmentPlan& plan) {
  return tds_segment(ham_t.encoding, plan);
}

ComplexOperator tds_block_algebra(const std::vector<ComplexOperator>& samples, double tau,
                                  int K) {
  SampledHamiltonian hs;
  hs.t = tau;
  hs.M = samples.size();
  hs.samples = samples;
  const ComplexOperator s = dyson_sum_from_terms(riemann_terms(hs, K), tau, samples.size());
  return oaa_block(0.5 * s);
}

int tds_layout_qubits(int n_s, int n_a, int K, std::uint64_t M) {
  const int n_b = ceil_log2(static_cast<std::uint64_t>(K) + 1) + 1;
  const int n_c = n_b - 1;
  const int n_d = ceil_log2(M);
  return n_s + n_a + n_b + n_c + 2 * n_d + 1 + 1;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::circuit:
      return "circuit";
    case Backend::block_algebra:
      return "block_algebra";
    case Backend::automatic:
      break;
  }
  return "automatic";
}

int max_circuit_qubits() {
  const char* env = std::getenv("DYSONSIM_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return tol::kDefaultMaxQubits;
  int value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1 || value > 40) {
    throw InvalidArgument(std::string("DYSONSIM_MAX_QUBITS must be an integer in 1..40, got '") +
                          env + "'");
  }
  return value;
}

}  // namespace dysonsim
