// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "dysonsim/core/types.hpp"
#include "dysonsim/models/sampled_hamiltonian.hpp"

namespace dysonsim {

/// prod_{j=r..1} e^{-i H(t (j-1)/r) t/r}: left-endpoint product formula with
/// later times on the left.
ComplexOperator product_formula(const HamiltonianFunction& generator, double t,
                                std::uint64_t r);

struct PropagatorResult {
  ComplexOperator U;
  /// Spectral-norm change between the last two extrapolated refinements.
  double delta = 0.0;
  /// Steps of the finest product formula evaluated.
  std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kMaxPropagatorSteps = std::uint64_t{1} << 22;

/// Time-ordered propagator on [0, t]. The product formula is evaluated at
/// r = 1, 2, 4, ... and extrapolated in 1/r until two successive estimates
/// differ by less than `tol`; the result is projected onto the nearest
/// unitary. Throws ConvergenceError once r would exceed `max_steps`.
PropagatorResult exact_propagator_detailed(const HamiltonianFunction& generator, double t,
                                           double tol = 1e-10,
                                           std::uint64_t max_steps = kMaxPropagatorSteps);

ComplexOperator exact_propagator(const HamiltonianFunction& generator, double t,
                                 double tol = 1e-10);

/// B_0..B_K with B_k = sum over m_1 < ... < m_k of H_{m_k} ... H_{m_1}.
std::vector<ComplexOperator> riemann_terms(const SampledHamiltonian& hs, int K);

/// Upper end of the admissible error range, 2^{1-e}.
double max_bound_backed_error();

/// K = ceil(-1 + 2 ln(2/eps) / (ln ln(2/eps) + 1)) for eps in (0, 2^{1-e}].
int choose_truncation_order(double eps);

/// Smallest power of two >= max(16 t^2 / eps * (avg_deriv + max_norm^2), K^2).
std::uint64_t choose_discretization(double t, double avg_deriv, double max_norm, double eps,
                                    int K);

/// Interaction-frame grid for H_I(s) = e^{iAs} B e^{-iAs}: the bound above
/// with avg ||dH_I/ds|| <= 2 alpha_A alpha_B and max ||H_I|| = alpha_B.
std::uint64_t choose_interaction_discretization(double tau, double alpha_a, double alpha_b,
                                                double eps, int K);

/// Largest per-segment average of ||dH/ds|| over L equal segments of [0, t].
double max_segment_avg_deriv(const HamiltonianFunction& generator, double t, std::uint64_t L,
                             std::uint64_t points_per_segment = 1024);

/// sum_{k<=K} (-i t/M)^k B_k.
ComplexOperator truncated_dyson_sum(const SampledHamiltonian& hs, int K);

/// sum_{k<=K} (-i t/M)^k B_k for explicitly given Riemann terms.
ComplexOperator dyson_sum_from_terms(const std::vector<ComplexOperator>& terms, double t,
                                     std::uint64_t M);

struct SegmentSchedule {
  std::uint64_t L = 1;
  double tau = 0.0;
};

/// L = ceil(2 alpha t) (at least 1) and tau = t / L. `alpha` may carry the
/// relative safety factor of measured norms; it is discounted before the
/// ceiling so that alpha = 1, t = 1 yields L = 2.
SegmentSchedule segment_schedule(double t_total, double alpha);

struct DysonParameters {
  int K = 0;
  std::uint64_t M = 1;
  double t = 0.0;
  double eps = 0.0;
  /// False when eps lies outside (0, 2^{1-e}] or max ||H|| t > ln 2.
  bool bound_backed = true;
};

/// K and M for one segment of duration t. eps above 2^{1-e} is accepted when
/// `allow_unbacked` is set; K is then evaluated at the boundary.
DysonParameters choose_dyson_parameters(double t, double avg_deriv, double max_norm,
                                        double eps, bool allow_unbacked = false);

}  // namespace dysonsim
