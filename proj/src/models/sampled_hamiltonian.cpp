// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/models/sampled_hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {
namespace {

ComplexOperator evaluate(const HamiltonianFunction& generator, double s) {
  ComplexOperator h = generator(s);
  require_hermitian(h, "Hamiltonian generator");
  return h;
}

// Finite-difference step: small relative to the interval but far above
// rounding noise.
double derivative_step(double t) { return 1e-5 * std::max(1.0, t); }

// ||dH/ds|| at s, using only points inside [0, t] when t > 0.
double derivative_norm(const HamiltonianFunction& generator, double s, double t) {
  const double h = derivative_step(t);
  ComplexOperator d;
  if (t > 0.0 && s - h < 0.0) {
    d = (-3.0 * evaluate(generator, s) + 4.0 * evaluate(generator, s + h) -
         evaluate(generator, s + 2.0 * h)) /
        (2.0 * h);
  } else if (t > 0.0 && s + h > t) {
    d = (3.0 * evaluate(generator, s) - 4.0 * evaluate(generator, s - h) +
         evaluate(generator, s - 2.0 * h)) /
        (2.0 * h);
  } else {
    d = (evaluate(generator, s + h) - evaluate(generator, s - h)) / (2.0 * h);
  }
  return spectral_norm(d);
}

}  // namespace

HamiltonianMetadata measure_hamiltonian(const HamiltonianFunction& generator, double t,
                                        std::uint64_t points) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("measure_hamiltonian: duration must be finite and >= 0");
  }
  if (points == 0) throw InvalidArgument("measure_hamiltonian: need at least one point");
  HamiltonianMetadata meta;
  if (t == 0.0) {
    meta.max_norm = spectral_norm(evaluate(generator, 0.0));
    meta.avg_deriv = derivative_norm(generator, 0.0, 0.0);
  } else {
    const double step = t / static_cast<double>(points);
    double integral = 0.0;
    for (std::uint64_t i = 0; i <= points; ++i) {
      const double s = (i == points) ? t : step * static_cast<double>(i);
      meta.max_norm = std::max(meta.max_norm, spectral_norm(evaluate(generator, s)));
      const double w = (i == 0 || i == points) ? 0.5 : 1.0;
      integral += w * derivative_norm(generator, s, t);
    }
    meta.avg_deriv = integral * step / t;
  }
  meta.alpha = meta.max_norm * (1.0 + tol::kAlphaHeadroom);
  return meta;
}

SampledHamiltonian sample_hamiltonian(const HamiltonianFunction& generator, double t,
                                      std::uint64_t M) {
  if (M == 0) throw InvalidArgument("sample_hamiltonian: M must be >= 1");
  const HamiltonianMetadata meta = measure_hamiltonian(generator, t, 4 * M);
  SampledHamiltonian out;
  out.t = t;
  out.M = M;
  out.delta = t / static_cast<double>(M);
  out.samples.reserve(M);
  for (std::uint64_t m = 0; m < M; ++m) {
    out.samples.push_back(evaluate(generator, out.delta * static_cast<double>(m)));
  }
  out.alpha = meta.alpha;
  out.max_norm = meta.max_norm;
  out.avg_deriv = meta.avg_deriv;
  return out;
}

SampledHamiltonian sampled_from_list(std::vector<ComplexOperator> samples, double t) {
  if (samples.empty()) throw InvalidArgument("sampled_from_list: no samples");
  SampledHamiltonian out;
  out.t = t;
  out.M = samples.size();
  out.delta = t / static_cast<double>(out.M);
  double integral = 0.0;
  for (std::size_t m = 0; m < samples.size(); ++m) {
    require_hermitian(samples[m], "sampled_from_list");
    if (samples[m].rows() != samples.front().rows()) {
      throw InvalidArgument("sampled_from_list: samples differ in dimension");
    }
    out.max_norm = std::max(out.max_norm, spectral_norm(samples[m]));
    if (m > 0) integral += spectral_norm(samples[m] - samples[m - 1]);
  }
  out.alpha = out.max_norm * (1.0 + tol::kAlphaHeadroom);
  out.avg_deriv = t > 0.0 ? integral / t : 0.0;
  out.samples = std::move(samples);
  return out;
}

}  // namespace dysonsim
