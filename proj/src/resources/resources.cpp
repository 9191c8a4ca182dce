// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/resources/resources.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/dyson/dyson.hpp"
#include "dysonsim/gadgets/simulation.hpp"

namespace dysonsim {
namespace {

constexpr char kDysonSource[] = "dyson truncation + riemann discretization";
constexpr char kInteractionSource[] = "dyson truncation + interaction-frame discretization";
constexpr char kTaylorSource[] = "taylor truncation";

void require_inputs(double t, double eps, const char* what) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument(std::string(what) + ": t must be >= 0");
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument(std::string(what) + ": eps must be positive");
  }
}

void require_nonnegative(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0) {
    throw InvalidArgument(std::string(what) + " must be finite and >= 0");
  }
}

// K at the per-segment budget, clamped to the bound-backed domain.
int segment_order(double eps_seg, ResourceEstimate& e) {
  const double edge = max_bound_backed_error();
  if (eps_seg > edge) {
    e.bound_backed = false;
    e.notes.emplace_back("per-segment error above 2^(1-e): truncation evaluated at the edge");
  }
  return choose_truncation_order(std::min(eps_seg, edge));
}

double beta_prime(double x, int K) {
  double beta = 0.0;
  for (int k = 0; k <= K; ++k) beta += std::pow(x, k);
  return beta;
}

ResourceEstimate zero_estimate(const char* picture, double t, double eps) {
  ResourceEstimate e;
  e.picture = picture;
  e.t = t;
  e.eps = eps;
  e.L = 0;
  e.M = 0;
  return e;
}

int compression_qubits(int K) {
  const int n_b = ceil_log2(static_cast<std::uint64_t>(K) + 1) + 1;
  return n_b + (n_b - 1);
}

}  // namespace

ResourceEstimate estimate_tds(double alpha, double t, double eps, double avg_deriv,
                              double max_norm, EncodingShape shape) {
  require_inputs(t, eps, "estimate_tds");
  require_nonnegative(alpha, "estimate_tds: alpha");
  require_nonnegative(avg_deriv, "estimate_tds: avg_deriv");
  require_nonnegative(max_norm, "estimate_tds: max_norm");
  ResourceEstimate e = zero_estimate("schrodinger_tds", t, eps);
  e.alpha_B = alpha;
  e.bound_source = kDysonSource;
  if (t == 0.0 || alpha == 0.0) return e;
  const auto sched = segment_schedule(t, alpha);
  e.L = sched.L;
  e.tau = sched.tau;
  const double eps_seg = eps / static_cast<double>(sched.L);
  e.K = segment_order(eps_seg, e);
  e.M = choose_discretization(sched.tau, avg_deriv, max_norm, eps_seg, e.K);
  e.beta = beta_prime(alpha * sched.tau, e.K);
  e.queries_ham_t = 3 * static_cast<std::int64_t>(e.K) * static_cast<std::int64_t>(e.L);
  e.qubits = tds_layout_qubits(shape.system_qubits, shape.ancilla_qubits, e.K, e.M);
  return e;
}

ResourceEstimate estimate_interaction(double alpha_A, double alpha_B, double t, double eps,
                                      EncodingShape shape) {
  require_inputs(t, eps, "estimate_interaction");
  require_nonnegative(alpha_A, "estimate_interaction: alpha_A");
  require_nonnegative(alpha_B, "estimate_interaction: alpha_B");
  ResourceEstimate e = zero_estimate("interaction_tds", t, eps);
  e.alpha_A = alpha_A;
  e.alpha_B = alpha_B;
  e.bound_source = kInteractionSource;
  if (t == 0.0) return e;
  if (alpha_B == 0.0) {
    e.L = 1;
    e.queries_eA = 1;
    return e;
  }
  const auto sched = segment_schedule(t, alpha_B);
  e.L = sched.L;
  e.tau = sched.tau;
  const double eps_seg = eps / static_cast<double>(sched.L);
  e.K = segment_order(eps_seg, e);
  e.M = choose_interaction_discretization(sched.tau, alpha_A, alpha_B, eps_seg, e.K);
  e.beta = beta_prime(alpha_B * sched.tau, e.K);
  e.queries_ham_t = 3 * static_cast<std::int64_t>(e.K) * static_cast<std::int64_t>(e.L);
  e.queries_eA = static_cast<std::int64_t>(e.L);
  e.qubits = tds_layout_qubits(shape.system_qubits, shape.ancilla_qubits, e.K, e.M);
  return e;
}

ResourceEstimate estimate_sparse(int d, double Hmax, int system_qubits, double t, double eps) {
  if (d < 1) throw InvalidArgument("estimate_sparse: d must be >= 1");
  require_nonnegative(Hmax, "estimate_sparse: Hmax");
  if (system_qubits < 1) throw InvalidArgument("estimate_sparse: system_qubits must be >= 1");
  ResourceEstimate e = estimate_tds(d * Hmax, t, eps, 0.0, d * Hmax,
                                    EncodingShape{system_qubits, system_qubits + 2});
  e.picture = "sparse_tds";
  return e;
}

ResourceEstimate estimate_tts(double alpha, double t, double eps, EncodingShape shape) {
  require_inputs(t, eps, "estimate_tts");
  require_nonnegative(alpha, "estimate_tts: alpha");
  ResourceEstimate e = zero_estimate("schrodinger_tts", t, eps);
  e.alpha_B = alpha;
  e.bound_source = kTaylorSource;
  if (t == 0.0 || alpha == 0.0) return e;
  const double x = alpha * t;
  e.L = static_cast<std::uint64_t>(std::max(1.0, std::ceil(x / std::numbers::ln2 - 1e-12)));
  e.tau = t / static_cast<double>(e.L);
  e.K = tts_truncation_order(alpha * e.tau, eps / static_cast<double>(e.L));
  e.M = 1;
  double term = 1.0;
  for (int k = 0; k <= e.K; ++k) {
    e.beta += term;
    term *= alpha * e.tau / static_cast<double>(k + 1);
  }
  e.queries_ham_t = 3 * static_cast<std::int64_t>(e.K) * static_cast<std::int64_t>(e.L);
  e.qubits = shape.system_qubits + shape.ancilla_qubits + compression_qubits(e.K) + 1;
  return e;
}

std::vector<ResourceEstimate> compare_pictures(const PictureModel& model, double t, double eps,
                                               bool simulate) {
  require_nonnegative(model.alpha_A, "compare_pictures: alpha_A");
  require_nonnegative(model.alpha_B, "compare_pictures: alpha_B");
  const double alpha = model.alpha_A + model.alpha_B;
  std::vector<ResourceEstimate> rows;
  rows.push_back(estimate_tts(alpha, t, eps, model.shape));
  rows.push_back(estimate_tds(alpha, t, eps, 0.0, alpha, model.shape));
  rows.push_back(estimate_interaction(model.alpha_A, model.alpha_B, t, eps, model.shape));
  rows[0].alpha_A = rows[1].alpha_A = model.alpha_A;
  rows[0].alpha_B = rows[1].alpha_B = model.alpha_B;
  rows[1].notes.emplace_back("time-independent H: derivative term is zero");
  if (!simulate || !model.A || !model.B) return rows;

  const ComplexOperator& a = *model.A;
  const ComplexOperator& b = *model.B;
  const ComplexOperator h = a + b;
  const ComplexOperator exact = matrix_exponential(h, t);
  EvolveOptions opts;
  opts.backend = Backend::block_algebra;
  opts.allow_unbacked = true;
  const double norm = spectral_norm(h);
  if (norm == 0.0 || t == 0.0) {
    for (auto& r : rows) r.achieved_error = 0.0;
    return rows;
  }
  const auto tts =
      tts_evolve(unitary_completion(h, norm * (1.0 + tol::kAlphaHeadroom)), t, eps, opts);
  rows[0].achieved_error = spectral_norm(tts.U - exact);
  const auto tds = multi_segment_evolve([&](double) { return h; }, t, eps, opts);
  rows[1].achieved_error = spectral_norm(tds.U - exact);
  const auto ip = interaction_evolve(a, b, t, eps, opts);
  rows[2].achieved_error = spectral_norm(ip.U - exact);
  return rows;
}

const std::vector<std::string>& estimate_csv_columns() {
  static const std::vector<std::string> cols{
      "picture", "alpha_A",       "alpha_B",    "t",      "eps",  "L",
      "K",       "M",             "queries_ham_t", "queries_eA", "qubits", "bound_source"};
  return cols;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string estimate_csv_row(const ResourceEstimate& e) {
  std::string source = e.bound_source;
  if (!e.bound_backed) source += " (unbacked)";
  std::string out;
  out += e.picture + ",";
  out += format_number(e.alpha_A) + ",";
  out += format_number(e.alpha_B) + ",";
  out += format_number(e.t) + ",";
  out += format_number(e.eps) + ",";
  out += std::to_string(e.L) + ",";
  out += std::to_string(e.K) + ",";
  out += std::to_string(e.M) + ",";
  out += std::to_string(e.queries_ham_t) + ",";
  out += std::to_string(e.queries_eA) + ",";
  out += std::to_string(e.qubits) + ",";
  out += "\"" + source + "\"";
  return out;
}

}  // namespace dysonsim
