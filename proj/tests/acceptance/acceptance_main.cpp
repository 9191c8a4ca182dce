// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/random.hpp"
#include "dysonsim/dyson/dyson.hpp"
#include "dysonsim/encoding/block_encoding.hpp"
#include "dysonsim/gadgets/gadgets.hpp"
#include "dysonsim/gadgets/simulation.hpp"
#include "dysonsim/models/fermions.hpp"
#include "dysonsim/models/hubbard.hpp"
#include "dysonsim/models/sampled_hamiltonian.hpp"
#include "dysonsim/models/sparse.hpp"
#include "dysonsim/resources/resources.hpp"

using namespace dysonsim;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: " << what << "; ";
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Outcome&)> run;
};

HamiltonianFunction rotating_field() {
  return [](double s) {
    return ComplexOperator(std::cos(s) * pauli::x() + std::sin(s) * pauli::z());
  };
}

SampledHamiltonian samples_of(std::vector<ComplexOperator> h, double t, double alpha) {
  SampledHamiltonian hs;
  hs.t = t;
  hs.M = h.size();
  hs.delta = t / static_cast<double>(h.size());
  hs.samples = std::move(h);
  hs.alpha = alpha;
  return hs;
}

ComplexOperator enumerate_terms(const std::vector<ComplexOperator>& h, int k) {
  const Eigen::Index n = h.front().rows();
  ComplexOperator total = ComplexOperator::Zero(n, n);
  std::function<void(int, int, ComplexOperator)> rec = [&](int start, int left,
                                                           ComplexOperator acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (int m = start; m < static_cast<int>(h.size()); ++m) rec(m + 1, left - 1, h[m] * acc);
  };
  rec(0, k, ComplexOperator::Identity(n, n));
  return total;
}

void compression_identity(Outcome& o) {
  Rng rng(101);
  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    std::vector<BlockEncoding> encs;
    std::vector<ComplexOperator> h;
    for (int j = 0; j < 3; ++j) {
      h.push_back(random_scaled(2, rng, uniform(rng, 0.05, 1.0)));
      encs.push_back(unitary_completion(h.back(), 1.0, "s", "a" + std::to_string(j)));
    }
    const auto g = compression_gadget(encs);
    ComplexOperator prod = ComplexOperator::Identity(2, 2);
    for (int k = 0; k <= 3; ++k) {
      if (k > 0) prod = h[k - 1] * prod;
      worst = std::max(worst, max_abs(sector_block(g, k) - prod));
    }
  }
  o.detail << "max deviation " << worst;
  o.require(worst <= 1e-10, "sector deviation");
}

void dys_k_identity(Outcome& o) {
  Rng rng(102);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    std::vector<ComplexOperator> h;
    for (int m = 0; m < 4; ++m) h.push_back(random_hermitian(2, rng, uniform(rng, 0.05, 1.0)));
    const auto hs = samples_of(h, 0.25, 1.0);
    const auto g = dys_k(ham_t_from_samples(hs), 3);
    const auto b = riemann_terms(hs, 3);
    for (int k = 0; k <= 3; ++k) {
      worst = std::max(worst, max_abs(sector_block(g, k) - b[k] / std::pow(4.0, k)));
    }
  }
  o.detail << "max deviation " << worst;
  o.require(worst <= 1e-10, "sector deviation");
}

struct SmoothFamily {
  ComplexOperator a, b, c;
  double omega;
  ComplexOperator operator()(double s) const {
    return std::cos(omega * s) * a + std::sin(omega * s) * b + c;
  }
};

void dyson_error_bound(Outcome& o) {
  Rng rng(103);
  int violations = 0;
  double worst_ratio = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    SmoothFamily fam{random_hermitian(4, rng, uniform(rng, 0.0, 1.0 / 3.0)),
                     random_hermitian(4, rng, uniform(rng, 0.0, 1.0 / 3.0)),
                     random_hermitian(4, rng, uniform(rng, 0.0, 1.0 / 3.0)),
                     uniform(rng, 0.5, 3.0)};
    const HamiltonianFunction gen = fam;
    const auto wide = measure_hamiltonian(gen, 1.0, 4096);
    const double t = uniform(rng, 0.2, std::min(1.0, 0.99 * std::numbers::ln2 / wide.alpha));
    const auto meta = measure_hamiltonian(gen, t, 1024);
    const ComplexOperator exact = exact_propagator(gen, t);
    for (double eps : {0.05, 0.01, 0.001}) {
      const auto p = choose_dyson_parameters(t, meta.avg_deriv, meta.alpha, eps);
      if (!p.bound_backed) ++violations;
      const ComplexOperator approx = truncated_dyson_sum(sample_hamiltonian(gen, t, p.M), p.K);
      const double err = spectral_norm(approx - exact);
      worst_ratio = std::max(worst_ratio, err / eps);
      if (err > eps) ++violations;
    }
  }
  o.detail << "violations " << violations << ", worst error/eps " << worst_ratio;
  o.require(violations == 0, "error bound");
}

void tds_segment_circuit(Outcome& o) {
  const double tau = 0.1;
  const double eps = 0.05;
  const auto gen = rotating_field();
  const auto meta = measure_hamiltonian(gen, tau, 1024);
  const auto p = choose_dyson_parameters(tau, meta.avg_deriv, 1.0, eps);
  std::vector<ComplexOperator> h;
  for (std::uint64_t m = 0; m < p.M; ++m) {
    h.push_back(gen(tau * static_cast<double>(m) / static_cast<double>(p.M)));
  }
  const auto oracle = instrument(ham_t_from_samples(samples_of(h, tau, 1.0)));
  const auto seg = tds_segment(oracle, make_tds_plan(1.0, tau, p.K, p.M));
  oracle.counter->reset();
  const ComplexOperator blk = extract_block(seg.encoding);
  const std::int64_t queries = oracle.counter->count() / blk.cols();
  const double err = spectral_norm(blk - exact_propagator(gen, tau));
  const int qubits = seg.encoding.layout.total_qubits();
  o.detail << "K " << p.K << ", M " << p.M << ", qubits " << qubits << " (" << qubits - 1
           << " + padding), error " << err << ", queries " << queries;
  o.require(err <= 4.0 * eps, "error");
  o.require(queries == 3 * p.K && p.K == 3, "query count");
  o.require(qubits - 1 == 16, "layout size");
}

void multi_segment(Outcome& o) {
  const auto gen = rotating_field();
  EvolveOptions opts;
  opts.backend = Backend::circuit;
  const auto r = multi_segment_evolve(gen, 1.0, 0.1, opts);
  const double err = spectral_norm(r.U - exact_propagator(gen, 1.0));
  const auto& rec = r.resources;
  o.detail << "L " << rec.L << ", K " << rec.K << ", M " << rec.M << ", qubits " << rec.qubits
           << ", error " << err << ", queries " << rec.queries_ham_t;
  o.require(rec.counted, "counter");
  o.require(rec.L == 2, "segment count");
  o.require(err <= 0.4, "error");
  o.require(rec.queries_ham_t == 3 * static_cast<std::int64_t>(rec.K * rec.L), "query count");
}

void interaction_picture(Outcome& o) {
  const ComplexOperator zi = pauli::from_string("ZI");
  const ComplexOperator b = 0.3 * pauli::from_string("XX");
  const auto small = interaction_evolve(5.0 * zi, b, 1.0, 0.05);
  const auto large = interaction_evolve(50.0 * zi, b, 1.0, 0.05);
  const double err = spectral_norm(small.U - matrix_exponential(5.0 * zi + b, 1.0));
  const double err_large = spectral_norm(large.U - matrix_exponential(50.0 * zi + b, 1.0));
  const auto est = estimate_interaction(small.resources.alpha_A, small.resources.alpha_B, 1.0,
                                        0.05);
  o.detail << "backend " << small.resources.backend << ", error " << err << " / " << err_large
           << ", queries " << small.resources.queries_ham_t << " / "
           << large.resources.queries_ham_t << ", M " << small.resources.M << " -> "
           << large.resources.M;
  o.require(err <= 0.2 && err_large <= 0.2, "error");
  o.require(small.resources.queries_ham_t == large.resources.queries_ham_t, "query invariance");
  o.require(large.resources.M > small.resources.M, "M growth");
  o.require(est.M == small.resources.M && est.queries_ham_t == small.resources.queries_ham_t,
            "estimate reconciliation");
}

void hubbard_end_to_end(Outcome& o) {
  HubbardSpec spec;
  spec.N = 2;
  spec.T = {0.0, -1.0};
  spec.U = {{0.0, 0.0}, {0.0, 0.0}};
  spec.V = {1.0, 0.25};
  const auto parts = build_hubbard(spec);
  const ComplexOperator a = parts.onsite + parts.interaction;
  const ComplexOperator& b = parts.kinetic;
  const auto diag = sparse_from_matrices({a}, 1);
  const auto r = interaction_evolve(a, b, 1.0, 1e-2, {}, &diag);
  const double err = spectral_norm(r.U - matrix_exponential(parts.total, 1.0));
  const ComplexOperator n = total_number_operator(parts.n_modes);
  const double comm = max_abs(parts.total * n - n * parts.total);
  o.detail << "dim " << parts.total.rows() << ", backend " << r.resources.backend << ", L "
           << r.resources.L << ", K " << r.resources.K << ", M " << r.resources.M << ", error "
           << err << ", [H,N] " << comm << ", e^{-iA tau} oracle queries "
           << r.resources.queries_eA_oracle;
  o.require(parts.total.rows() == 16, "Fock dimension");
  o.require(err <= 4e-2, "error");
  o.require(comm <= 1e-10, "number conservation");
  o.require(r.resources.queries_eA_oracle == 2 * r.resources.queries_eA, "fast-forward queries");
}

void fourier_identity(Outcome& o) {
  Rng rng(108);
  double worst = 0.0;
  for (int N : {2, 3, 4}) {
    for (int draw = 0; draw < 5; ++draw) {
      HubbardSpec spec;
      spec.N = N;
      spec.T.assign(N, 0.0);
      spec.U.assign(N, {0.0, 0.0});
      spec.V.assign(N, 0.0);
      for (int s = 0; s <= N / 2; ++s) {
        const double v = uniform(rng, -1.0, 1.0);
        spec.V[s] = v;
        spec.V[(N - s) % N] = v;
      }
      worst = std::max(worst, fourier_potential_identity_check(spec));
    }
  }
  o.detail << "max deviation " << worst;
  o.require(worst <= 1e-10, "identity");
}

ComplexOperator random_sparse_hermitian(std::uint64_t dim, int d, Rng& rng) {
  ComplexOperator h = ComplexOperator::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  std::vector<int> order(dim);
  for (std::uint64_t i = 0; i < dim; ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  const auto phase = [&]() {
    return std::polar(uniform(rng, 0.1, 1.0), uniform(rng, -std::numbers::pi, std::numbers::pi));
  };
  // Random matching: one off-diagonal entry per matched row.
  for (std::uint64_t i = 0; i + 1 < dim; i += 2) {
    const Complex v = phase();
    h(order[i], order[i + 1]) = v;
    h(order[i + 1], order[i]) = std::conj(v);
  }
  for (std::uint64_t i = 0; i < dim; ++i) {
    const bool matched = (dim % 2 == 0) || i + 1 < dim;
    if (d == 2 || !matched) h(order[i], order[i]) = uniform(rng, -1.0, 1.0);
  }
  return h;
}

void sparse_synthesis(Outcome& o) {
  Rng rng(109);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const int d = 1 + draw % 2;
    const std::uint64_t dim = 2 + static_cast<std::uint64_t>(uniform(rng, 0.0, 6.999));
    const ComplexOperator h = random_sparse_hermitian(dim, d, rng);
    o.require(row_sparsity(h) <= d, "generated sparsity");
    const auto spec = sparse_from_matrices({h}, d);
    const auto enc = sparse_ham_t(spec);
    const ComplexOperator blk = block_at(enc, 0).topLeftCorner(h.rows(), h.cols());
    worst = std::max(worst, max_abs(blk - h / (d * spec.Hmax)));
  }
  std::set<int> counts;
  ComplexOperator diag = ComplexOperator::Zero(4, 4);
  for (int i = 0; i < 4; ++i) diag(i, i) = uniform(rng, -2.0, 2.0);
  for (double t : {0.1, 1.0, 10.0}) {
    counts.insert(diagonal_fast_forward(sparse_from_matrices({diag}, 1), t).queries);
  }
  o.detail << "max block deviation " << worst << ", fast-forward queries {";
  for (int c : counts) o.detail << c;
  o.detail << "}";
  o.require(worst <= 1e-9, "block deviation");
  o.require(counts == std::set<int>{2}, "fast-forward query count");
}

void taylor_series(Outcome& o) {
  Rng rng(110);
  const double t = std::numbers::ln2;
  const double eps = 1e-3;
  double worst = 0.0;
  double worst_cross = 0.0;
  EvolveOptions dense;
  dense.backend = Backend::block_algebra;
  for (int draw = 0; draw <= 10; ++draw) {
    const ComplexOperator h =
        draw == 0 ? pauli::z() : random_hermitian(2, rng, uniform(rng, 0.1, 1.0));
    const double norm = spectral_norm(h);
    const double alpha = draw == 0 ? 1.0 : norm * (1.0 + 1e-6);
    const auto tts = tts_evolve(unitary_completion(h, alpha), t, eps);
    const auto tds = multi_segment_evolve([&](double) { return h; }, t, eps, dense);
    const ComplexOperator exact = matrix_exponential(h, t);
    worst = std::max(worst, spectral_norm(tts.U - exact));
    worst_cross = std::max(worst_cross, spectral_norm(tts.U - tds.U));
    o.require(spectral_norm(tds.U - exact) <= 4.0 * eps, "TDS error");
  }
  o.detail << "max TTS error " << worst << ", max TTS-TDS gap " << worst_cross;
  o.require(worst <= 4.0 * eps, "TTS error");
  o.require(worst_cross <= 8.0 * eps, "cross-method agreement");
}

void oaa_exactness(Outcome& o) {
  Rng rng(111);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const Eigen::Index dim = draw % 2 == 0 ? 2 : 4;
    const ComplexOperator u = random_unitary(dim, rng);
    auto enc = unitary_completion(0.5 * u, 1.0);
    enc.alpha = 2.0;
    worst = std::max(worst, max_abs(extract_block(robust_oaa(enc)) - u));
  }
  o.detail << "max deviation " << worst;
  o.require(worst <= 1e-12, "amplified block");
}

void riemann_equivalence(Outcome& o) {
  Rng rng(112);
  double worst = 0.0;
  for (int M = 1; M <= 6; ++M) {
    for (int draw = 0; draw < 10; ++draw) {
      std::vector<ComplexOperator> h;
      for (int m = 0; m < M; ++m) h.push_back(random_hermitian(2, rng, 1.0));
      const auto terms = riemann_terms(sampled_from_list(h, 1.0), std::min(M, 3));
      for (int k = 0; k <= std::min(M, 3); ++k) {
        worst = std::max(worst, max_abs(terms[k] - enumerate_terms(h, k)));
      }
    }
  }
  o.detail << "max deviation " << worst;
  o.require(worst <= 1e-12, "term equivalence");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dysonsim acceptance suite"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criterion numbers");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "compression gadget sectors", 10, compression_identity},
      {2, "compressed Dyson sum sectors", 30, dys_k_identity},
      {3, "truncation and discretization error bound", 300, dyson_error_bound},
      {4, "single segment circuit", 120, tds_segment_circuit},
      {5, "multi-segment circuit", 240, multi_segment},
      {6, "interaction picture", 300, interaction_picture},
      {7, "Hubbard interaction picture", 300, hubbard_end_to_end},
      {8, "Fourier potential identity", 60, fourier_identity},
      {9, "sparse oracle synthesis", 60, sparse_synthesis},
      {10, "truncated Taylor series", 120, taylor_series},
      {11, "amplitude amplification exactness", 5, oaa_exactness},
      {12, "Riemann term recursion", 10, riemann_equivalence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.limit_s, "runtime limit");
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s  %s  [%.2f s / %.0f s]  %s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), secs, c.limit_s, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
