// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// Norm data of a time-dependent Hamiltonian on [0, t].
struct HamiltonianMetadata {
  /// Largest spectral norm seen on the refinement grid.
  double max_norm = 0.0;
  /// max_norm with the relative safety factor applied; the promised bound.
  double alpha = 0.0;
  /// (1/t) * integral of ||dH/ds|| over [0, t]; ||dH/ds|| at s = 0 when t = 0.
  double avg_deriv = 0.0;
};

/// H(m * delta) for m = 0..M-1 with delta = t / M, plus norm metadata.
struct SampledHamiltonian {
  double t = 0.0;
  std::uint64_t M = 1;
  double delta = 0.0;
  std::vector<ComplexOperator> samples;
  double alpha = 0.0;
  double max_norm = 0.0;
  double avg_deriv = 0.0;

  Eigen::Index dimension() const { return samples.empty() ? 0 : samples.front().rows(); }
};

/// Measures norms on `points` + 1 equally spaced times covering [0, t]
/// inclusive. ||dH/ds|| is taken from second-order finite differences and
/// integrated with the trapezoid rule.
HamiltonianMetadata measure_hamiltonian(const HamiltonianFunction& generator, double t,
                                        std::uint64_t points);

/// Samples the generator on the M-point left-endpoint grid. Metadata comes from
/// measure_hamiltonian on a 4M refinement whose points include every sample.
SampledHamiltonian sample_hamiltonian(const HamiltonianFunction& generator, double t,
                                      std::uint64_t M);

/// Builds a SampledHamiltonian from explicit samples. The norm bound is
/// taken over the samples only and avg_deriv from their finite differences.
SampledHamiltonian sampled_from_list(std::vector<ComplexOperator> samples, double t);

}  // namespace dysonsim
