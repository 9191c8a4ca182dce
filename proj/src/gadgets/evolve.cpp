// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "dysonsim/core/block_column.hpp"
#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/dyson/dyson.hpp"
#include "dysonsim/gadgets/simulation.hpp"

namespace dysonsim {
namespace {

constexpr std::uint64_t kNormPoints = 1024;
constexpr std::uint64_t kDerivPointsPerSegment = 512;

int system_qubits(Eigen::Index dim, const char* what) {
  if (dim < 1 || !is_power_of_two(static_cast<std::uint64_t>(dim))) {
    throw InvalidArgument(std::string(what) + ": dimension must be a power of two");
  }
  return std::max(1, ceil_log2(static_cast<std::uint64_t>(dim)));
}

Backend resolve_backend(const EvolveOptions& options, int qubits, int n_s) {
  const int budget = options.max_qubits > 0 ? options.max_qubits : max_circuit_qubits();
  const bool fits = qubits <= budget && n_s <= tol::kDenseQubits;
  switch (options.backend) {
    case Backend::circuit:
      if (!fits) {
        throw BudgetExceeded("circuit backend needs " + std::to_string(qubits) +
                                 " qubits, budget is " + std::to_string(budget),
                             qubits, budget);
      }
      return Backend::circuit;
    case Backend::block_algebra:
      return Backend::block_algebra;
    case Backend::automatic:
      break;
  }
  return fits && qubits <= tol::kAutoCircuitQubits ? Backend::circuit : Backend::block_algebra;
}

// Builds the segment circuit, extracts its block and reports the HAM-T
// queries of a single application.
ComplexOperator run_segment(const InstrumentedOracle& oracle, const TdsSegmentPlan& plan,
                            std::int64_t& queries, int& qubits) {
  const auto seg = tds_segment(oracle, plan);
  qubits = seg.encoding.layout.total_qubits();
  oracle.counter->reset();
  ComplexOperator blk = extract_block(seg.encoding);
  const std::int64_t cols = blk.cols();
  if (oracle.counter->count() % cols != 0) {
    throw Error("segment query count is not uniform across input columns");
  }
  queries = oracle.counter->count() / cols;
  return blk;
}

struct Truncation {
  int K = 0;
  bool backed = true;
};

Truncation truncation_for(double eps_seg, bool allow_unbacked) {
  const double edge = max_bound_backed_error();
  Truncation out;
  if (eps_seg > edge) {
    if (!allow_unbacked) {
      throw InvalidArgument("per-segment error above 2^(1-e) has no error bound; "
                            "allow unbacked runs to proceed");
    }
    out.backed = false;
  }
  out.K = choose_truncation_order(std::min(eps_seg, edge));
  return out;
}

ComplexOperator power(const ComplexOperator& u, std::uint64_t L) {
  ComplexOperator out = ComplexOperator::Identity(u.rows(), u.cols());
  for (std::uint64_t j = 0; j < L; ++j) out = u * out;
  return out;
}

void require_inputs(double t, double eps, const char* what) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument(std::string(what) + ": t must be >= 0");
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument(std::string(what) + ": eps must be positive");
  }
}

}  // namespace

EvolveResult multi_segment_evolve(const HamiltonianFunction& generator, double t, double eps,
                                  const EvolveOptions& options) {
  require_inputs(t, eps, "multi_segment_evolve");
  const ComplexOperator h0 = generator(0.0);
  require_hermitian(h0, "multi_segment_evolve: H(0)");
  const int n_s = system_qubits(h0.rows(), "multi_segment_evolve");
  EvolveResult out;
  auto& rec = out.resources;
  rec.picture = "schrodinger";
  rec.L = 1;
  rec.M = 1;
  out.U = ComplexOperator::Identity(h0.rows(), h0.cols());
  const auto meta = measure_hamiltonian(generator, t, kNormPoints);
  if (t == 0.0 || meta.max_norm == 0.0) {
    rec.backend = "none";
    return out;
  }
  double alpha = meta.alpha;
  const auto sched = segment_schedule(t, alpha);
  rec.L = sched.L;
  rec.tau = sched.tau;
  rec.avg_deriv = max_segment_avg_deriv(generator, t, sched.L, kDerivPointsPerSegment);
  const double eps_seg = eps / static_cast<double>(sched.L);
  const auto tr = truncation_for(eps_seg, options.allow_unbacked);
  rec.K = tr.K;
  rec.M = choose_discretization(sched.tau, rec.avg_deriv, alpha, eps_seg, tr.K);
  rec.bound_backed = tr.backed;
  rec.qubits = tds_layout_qubits(n_s, 1, rec.K, rec.M);
  const Backend backend = resolve_backend(options, rec.qubits, n_s);
  rec.backend = backend_name(backend);

  std::vector<std::vector<ComplexOperator>> samples(sched.L);
  double sample_max = 0.0;
  for (std::uint64_t j = 0; j < sched.L; ++j) {
    samples[j].reserve(rec.M);
    for (std::uint64_t m = 0; m < rec.M; ++m) {
      const double s = sched.tau * (static_cast<double>(j) +
                                    static_cast<double>(m) / static_cast<double>(rec.M));
      samples[j].push_back(generator(s));
      if (backend == Backend::circuit) {
        sample_max = std::max(sample_max, spectral_norm(samples[j].back()));
      }
    }
  }
  // Grid points between the norm-measurement points may exceed the measured
  // bound by rounding; widen alpha rather than reject them.
  alpha = std::max(alpha, sample_max * (1.0 + tol::kAlphaHeadroom));
  rec.alpha = alpha;
  const auto plan = make_tds_plan(alpha, sched.tau, rec.K, rec.M);
  rec.beta_prime = plan.beta_prime;
  for (std::uint64_t j = 0; j < sched.L; ++j) {
    ComplexOperator blk;
    if (backend == Backend::circuit) {
      SampledHamiltonian hs;
      hs.t = sched.tau;
      hs.M = rec.M;
      hs.samples = std::move(samples[j]);
      hs.alpha = alpha;
      const auto oracle = instrument(ham_t_from_samples(hs));
      std::int64_t q = 0;
      blk = run_segment(oracle, plan, q, rec.qubits);
      rec.queries_ham_t += q;
      rec.counted = true;
    } else {
      blk = tds_block_algebra(samples[j], sched.tau, rec.K);
      rec.queries_ham_t += 3 * rec.K;
    }
    out.U = blk * out.U;
  }
  return out;
}

EvolveResult interaction_evolve(const ComplexOperator& a, const ComplexOperator& b, double t,
                                double eps, const EvolveOptions& options,
                                const SparseHamiltonianSpec* diagonal_a) {
  require_inputs(t, eps, "interaction_evolve");
  require_hermitian(a, "interaction_evolve: A");
  require_hermitian(b, "interaction_evolve: B");
  if (a.rows() != b.rows()) throw InvalidArgument("interaction_evolve: A and B differ in size");
  const int n_s = system_qubits(a.rows(), "interaction_evolve");
  EvolveResult out;
  auto& rec = out.resources;
  rec.picture = "interaction";
  rec.L = 1;
  rec.M = 1;
  rec.alpha_A = spectral_norm(a);
  const double norm_b = spectral_norm(b);
  out.U = ComplexOperator::Identity(a.rows(), a.cols());
  if (t == 0.0) {
    rec.backend = "none";
    return out;
  }
  auto e_a = [&](double tau) {
    if (diagonal_a != nullptr) {
      const auto ev = diagonal_fast_forward(*diagonal_a, tau);
      if (ev.unitary.rows() != a.rows()) {
        throw InvalidArgument("interaction_evolve: diagonal model does not match A");
      }
      rec.queries_eA_oracle += ev.queries;
      return ev.unitary;
    }
    return matrix_exponential(a, tau);
  };
  if (norm_b == 0.0) {
    rec.backend = "none";
    rec.queries_eA = 1;
    out.U = e_a(t);
    return out;
  }
  rec.alpha_B = norm_b * (1.0 + tol::kAlphaHeadroom);
  rec.alpha = rec.alpha_B;
  const auto sched = segment_schedule(t, rec.alpha_B);
  rec.L = sched.L;
  rec.tau = sched.tau;
  rec.avg_deriv = 2.0 * rec.alpha_A * rec.alpha_B;
  const double eps_seg = eps / static_cast<double>(sched.L);
  const auto tr = truncation_for(eps_seg, options.allow_unbacked);
  rec.K = tr.K;
  rec.bound_backed = tr.backed;
  rec.M = choose_interaction_discretization(sched.tau, rec.alpha_A, rec.alpha_B, eps_seg, tr.K);
  rec.qubits = tds_layout_qubits(n_s, 1, rec.K, rec.M);
  const Backend backend = resolve_backend(options, rec.qubits, n_s);
  rec.backend = backend_name(backend);
  const auto plan = make_tds_plan(rec.alpha_B, sched.tau, rec.K, rec.M);
  rec.beta_prime = plan.beta_prime;

  // Every segment uses the same frame H_I(s), s in [0, tau].
  ComplexOperator blk;
  if (backend == Backend::circuit) {
    const auto oracle =
        interaction_ham_t(a, unitary_completion(b, rec.alpha_B), sched.tau, rec.M);
    std::int64_t q = 0;
    blk = run_segment(oracle, plan, q, rec.qubits);
    rec.queries_ham_t = q * static_cast<std::int64_t>(sched.L);
    rec.counted = true;
  } else {
    std::vector<ComplexOperator> samples;
    samples.reserve(rec.M);
    for (std::uint64_t m = 0; m < rec.M; ++m) {
      const double th = sched.tau * static_cast<double>(m) / static_cast<double>(rec.M);
      const ComplexOperator rot = matrix_exponential(a, th);  // e^{-iA th}
      samples.push_back(rot.adjoint() * b * rot);
    }
    blk = tds_block_algebra(samples, sched.tau, rec.K);
    rec.queries_ham_t = 3 * rec.K * static_cast<std::int64_t>(sched.L);
  }
  for (std::uint64_t j = 0; j < sched.L; ++j) {
    const ComplexOperator ea = e_a(sched.tau);
    out.U = ea * blk * out.U;
    ++rec.queries_eA;
  }
  return out;
}

EvolveResult sparse_evolve(const SparseHamiltonianSpec& spec, double t, double eps,
                           const EvolveOptions& options) {
  require_inputs(t, eps, "sparse_evolve");
  validate_sparse(spec);
  if (spec.time_points != 1) {
    throw InvalidArgument("sparse_evolve: only time-independent sparse models are simulated");
  }
  const ComplexOperator h = sparse_matrix_materialize(spec, 0);
  const Eigen::Index dim = h.rows();
  const int n_s = std::max(1, ceil_log2(spec.dim));
  EvolveResult out;
  auto& rec = out.resources;
  rec.picture = "schrodinger";
  rec.L = 1;
  rec.M = 1;
  out.U = ComplexOperator::Identity(dim, dim);
  if (t == 0.0 || spec.Hmax == 0.0) {
    rec.backend = "none";
    return out;
  }
  rec.alpha = spec.d * spec.Hmax;
  const auto sched = segment_schedule(t, rec.alpha);
  rec.L = sched.L;
  rec.tau = sched.tau;
  const double eps_seg = eps / static_cast<double>(sched.L);
  const auto tr = truncation_for(eps_seg, options.allow_unbacked);
  rec.K = tr.K;
  rec.bound_backed = tr.backed;
  rec.M = choose_discretization(sched.tau, 0.0, rec.alpha, eps_seg, tr.K);
  rec.qubits = tds_layout_qubits(n_s, n_s + 2, rec.K, rec.M);
  const Backend backend = resolve_backend(options, rec.qubits, n_s);
  rec.backend = backend_name(backend);
  const auto plan = make_tds_plan(rec.alpha, sched.tau, rec.K, rec.M);
  rec.beta_prime = plan.beta_prime;
  ComplexOperator blk;
  if (backend == Backend::circuit) {
    SparseEncodingOptions opts;
    opts.tau = sched.tau;
    opts.min_time_points = rec.M;
    const auto oracle = instrument(sparse_ham_t(spec, opts));
    std::int64_t q = 0;
    blk = run_segment(oracle, plan, q, rec.qubits).topLeftCorner(dim, dim);
    rec.queries_ham_t = q * static_cast<std::int64_t>(sched.L);
    rec.counted = true;
  } else {
    // Constant samples: B_k = C(M, k) H^k.
    ComplexOperator s = ComplexOperator::Identity(dim, dim);
    ComplexOperator hp = ComplexOperator::Identity(dim, dim);
    Complex w(1.0, 0.0);
    const double mm = static_cast<double>(rec.M);
    for (int k = 1; k <= rec.K; ++k) {
      hp = h * hp;
      w *= Complex(0.0, -sched.tau / mm) * ((mm - k + 1) / k);
      s += w * hp;
    }
    blk = oaa_block(0.5 * s);
    rec.queries_ham_t = 3 * rec.K * static_cast<std::int64_t>(sched.L);
  }
  out.U = power(blk, sched.L);
  return out;
}

}  // namespace dysonsim
