// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/dyson/dyson.hpp"

namespace dysonsim {

std::vector<ComplexOperator> riemann_terms(const SampledHamiltonian& hs, int K) {
  if (K < 0) throw InvalidArgument("riemann_terms: K must be >= 0");
  const std::uint64_t M = hs.samples.size();
  if (M == 0) throw InvalidArgument("riemann_terms: no samples");
  if (static_cast<std::uint64_t>(K) > M) {
    throw InvalidArgument("riemann_terms: K = " + std::to_string(K) + " exceeds M = " +
                          std::to_string(M));
  }
  const Eigen::Index n = hs.dimension();
  // c[k] after step m holds the ordered sums over m_1 < ... < m_k <= m.
  std::vector<ComplexOperator> c(K + 1, ComplexOperator::Zero(n, n));
  c[0] = ComplexOperator::Identity(n, n);
  for (std::uint64_t m = 0; m < M; ++m) {
    const ComplexOperator& h = hs.samples[m];
    const int top = static_cast<int>(std::min<std::uint64_t>(K, m + 1));
    for (int k = top; k >= 1; --k) c[k].noalias() += h * c[k - 1];
  }
  return c;
}

double max_bound_backed_error() { return std::pow(2.0, 1.0 - std::numbers::e); }

int choose_truncation_order(double eps) {
  if (!(eps > 0.0) || eps > max_bound_backed_error()) {
    std::ostringstream os;
    os << "choose_truncation_order: eps = " << eps << " outside (0, 2^(1-e)]";
    throw InvalidArgument(os.str());
  }
  const double l = std::log(2.0 / eps);
  return static_cast<int>(std::ceil(-1.0 + 2.0 * l / (std::log(l) + 1.0)));
}

std::uint64_t choose_discretization(double t, double avg_deriv, double max_norm, double eps,
                                    int K) {
  if (!std::isfinite(t) || !std::isfinite(avg_deriv) || !std::isfinite(max_norm) ||
      !(eps > 0.0) || K < 0) {
    throw InvalidArgument("choose_discretization: inputs must be finite with eps > 0");
  }
  const double bound = std::max(16.0 * t * t / eps * (avg_deriv + max_norm * max_norm),
                                static_cast<double>(K) * K);
  constexpr double kLimit = 4611686018427387904.0;  // 2^62
  if (bound > kLimit) {
    throw BudgetExceeded("choose_discretization: M exceeds 2^62", 62, 62);
  }
  return next_power_of_two(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(bound))));
}

std::uint64_t choose_interaction_discretization(double tau, double alpha_a, double alpha_b,
                                                double eps, int K) {
  if (!(alpha_a >= 0.0) || !(alpha_b >= 0.0)) {
    throw InvalidArgument("choose_interaction_discretization: norms must be >= 0");
  }
  return choose_discretization(tau, 2.0 * alpha_a * alpha_b, alpha_b, eps, K);
}

double max_segment_avg_deriv(const HamiltonianFunction& generator, double t, std::uint64_t L,
                             std::uint64_t points_per_segment) {
  if (L == 0) throw InvalidArgument("max_segment_avg_deriv: L must be >= 1");
  const double tau = t / static_cast<double>(L);
  double worst = 0.0;
  for (std::uint64_t j = 0; j < L; ++j) {
    const double t0 = tau * static_cast<double>(j);
    const HamiltonianFunction shifted = [&generator, t0](double s) { return generator(t0 + s); };
    worst = std::max(worst, measure_hamiltonian(shifted, tau, points_per_segment).avg_deriv);
  }
  return worst;
}

ComplexOperator dyson_sum_from_terms(const std::vector<ComplexOperator>& terms, double t,
                                     std::uint64_t M) {
  if (terms.empty()) throw InvalidArgument("dyson_sum_from_terms: no terms");
  if (M == 0) throw InvalidArgument("dyson_sum_from_terms: M must be >= 1");
  const Complex step(0.0, -t / static_cast<double>(M));
  ComplexOperator out = terms[0];
  Complex w(1.0, 0.0);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    w *= step;
    out += w * terms[k];
  }
  return out;
}

ComplexOperator truncated_dyson_sum(const SampledHamiltonian& hs, int K) {
  return dyson_sum_from_terms(riemann_terms(hs, K), hs.t, hs.samples.size());
}

SegmentSchedule segment_schedule(double t_total, double alpha) {
  if (!std::isfinite(t_total) || t_total < 0.0) {
    throw InvalidArgument("segment_schedule: t must be finite and >= 0");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("segment_schedule: alpha must be positive and finite");
  }
  SegmentSchedule out;
  const double raw = 2.0 * alpha * t_total / (1.0 + tol::kAlphaHeadroom) - 1e-12;
  out.L = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(raw)));
  out.tau = t_total / static_cast<double>(out.L);
  return out;
}

DysonParameters choose_dyson_parameters(double t, double avg_deriv, double max_norm,
                                        double eps, bool allow_unbacked) {
  DysonParameters p;
  p.t = t;
  p.eps = eps;
  const double edge = max_bound_backed_error();
  if (!(eps > 0.0)) throw InvalidArgument("choose_dyson_parameters: eps must be positive");
  if (eps > edge) {
    if (!allow_unbacked) {
      throw InvalidArgument("choose_dyson_parameters: eps above 2^(1-e) has no error bound");
    }
    p.bound_backed = false;
  }
  p.K = choose_truncation_order(std::min(eps, edge));
  p.M = choose_discretization(t, avg_deriv, max_norm, eps, p.K);
  if (max_norm * t > std::numbers::ln2 * (1.0 + tol::kAlphaHeadroom)) p.bound_backed = false;
  return p;
}

}  // namespace dysonsim
