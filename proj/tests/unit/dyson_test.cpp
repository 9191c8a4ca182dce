// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/random.hpp"
#include "dysonsim/dyson/dyson.hpp"

using namespace dysonsim;

namespace {

HamiltonianFunction rotating_field() {
  return [](double s) {
    return ComplexOperator(std::cos(s) * pauli::x() + std::sin(s) * pauli::z());
  };
}

// Sum over all strictly increasing index tuples, by recursion.
ComplexOperator enumerate_terms(const std::vector<ComplexOperator>& h, int k) {
  const Eigen::Index n = h.front().rows();
  ComplexOperator total = ComplexOperator::Zero(n, n);
  std::function<void(int, int, ComplexOperator)> rec = [&](int start, int left,
                                                           ComplexOperator acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (int m = start; m < static_cast<int>(h.size()); ++m) {
      rec(m + 1, left - 1, h[m] * acc);
    }
  };
  rec(0, k, ComplexOperator::Identity(n, n));
  return total;
}

struct SmoothFamily {
  ComplexOperator a, b, c;
  double omega;
  ComplexOperator operator()(double s) const {
    return std::cos(omega * s) * a + std::sin(omega * s) * b + c;
  }
};

}  // namespace

TEST(ExactPropagator, constantGenerator) {
  Rng rng(41);
  const ComplexOperator h = random_hermitian(4, rng, 1.3);
  const ComplexOperator u = exact_propagator([&](double) { return h; }, 0.8, 1e-11);
  EXPECT_LE(spectral_norm(u - matrix_exponential(h, 0.8)), 1e-10);
}

TEST(ExactPropagator, commutingFamily) {
  const double t = 0.9;
  const ComplexOperator u =
      exact_propagator([](double s) { return ComplexOperator(s * pauli::z()); }, t);
  EXPECT_LE(spectral_norm(u - matrix_exponential(pauli::z(), t * t / 2.0)), 1e-9);
}

TEST(ExactPropagator, firstOrderRatioAndUnitarity) {
  const auto gen = rotating_field();
  const auto res = exact_propagator_detailed(gen, 0.5);
  EXPECT_LE(unitarity_defect(res.U), 1e-10);
  EXPECT_LT(res.delta, 1e-10);
  std::vector<double> err;
  for (std::uint64_t r : {64u, 128u, 256u, 512u}) {
    err.push_back(spectral_norm(product_formula(gen, 0.5, r) - res.U));
  }
  for (std::size_t i = 1; i < err.size(); ++i) {
    EXPECT_NEAR(err[i - 1] / err[i], 2.0, 0.05);
  }
}

TEST(ExactPropagator, zeroDurationIsIdentity) {
  const auto res = exact_propagator_detailed(rotating_field(), 0.0);
  EXPECT_LE(max_abs(res.U - ComplexOperator::Identity(2, 2)), 1e-15);
}

TEST(ExactPropagator, reportsNonConvergence) {
  // A discontinuous generator defeats the extrapolation; the tolerance is
  // below what the step limit can reach.
  const HamiltonianFunction jumpy = [](double s) {
    return ComplexOperator((std::sin(1e7 * s) > 0 ? 1.0 : -1.0) * pauli::x() +
                           s * pauli::z());
  };
  try {
    exact_propagator_detailed(jumpy, 1.0, 1e-300, 1024);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.last_delta(), 0.0);
  }
}

TEST(RiemannTerms, zerothTermIsIdentity) {
  Rng rng(42);
  std::vector<ComplexOperator> s{random_hermitian(2, rng), random_hermitian(2, rng)};
  const auto b = riemann_terms(sampled_from_list(s, 1.0), 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(max_abs(b[0] - ComplexOperator::Identity(2, 2)), 0.0);
}

TEST(RiemannTerms, twoPointHandValues) {
  Rng rng(43);
  std::vector<ComplexOperator> s{random_hermitian(2, rng), random_hermitian(2, rng)};
  const auto b = riemann_terms(sampled_from_list(s, 1.0), 2);
  EXPECT_LE(max_abs(b[1] - (s[0] + s[1])), 1e-15);
  EXPECT_LE(max_abs(b[2] - s[1] * s[0]), 1e-15);
}

TEST(RiemannTerms, recursionMatchesEnumeration) {
  Rng rng(44);
  for (int M = 1; M <= 6; ++M) {
    std::vector<ComplexOperator> s;
    for (int m = 0; m < M; ++m) s.push_back(random_hermitian(3, rng));
    const int K = std::min(M, 3);
    const auto b = riemann_terms(sampled_from_list(s, 1.0), K);
    for (int k = 0; k <= K; ++k) {
      EXPECT_LE(max_abs(b[k] - enumerate_terms(s, k)), 1e-12) << "M=" << M << " k=" << k;
    }
  }
}

TEST(RiemannTerms, rejectsOrderAboveGrid) {
  EXPECT_THROW(riemann_terms(sampled_from_list({pauli::x()}, 1.0), 2), InvalidArgument);
}

TEST(TruncationOrder, closedFormValues) {
  EXPECT_EQ(choose_truncation_order(0.05), 3);
  EXPECT_EQ(choose_truncation_order(1e-3), 5);
  EXPECT_NO_THROW(choose_truncation_order(max_bound_backed_error()));
  EXPECT_GE(choose_truncation_order(max_bound_backed_error()), 1);
  EXPECT_THROW(choose_truncation_order(0.0), InvalidArgument);
  EXPECT_THROW(choose_truncation_order(0.31), InvalidArgument);
}

TEST(Discretization, formulaAndRounding) {
  EXPECT_EQ(choose_discretization(0.1, 1.0, 1.0, 0.05, 3), 16u);
  EXPECT_EQ(choose_discretization(0.5, 1.0, 1.0, 1e-3, 5), 8192u);
  EXPECT_EQ(choose_discretization(0.7, 0.0, 0.0, 1e-3, 5), 32u);
  EXPECT_EQ(choose_discretization(0.7, 0.0, 0.0, 1e-3, 4), 16u);
}

TEST(TruncatedDyson, orderZeroIsIdentity) {
  const auto hs = sample_hamiltonian(rotating_field(), 0.4, 8);
  EXPECT_EQ(max_abs(truncated_dyson_sum(hs, 0) - ComplexOperator::Identity(2, 2)), 0.0);
}

TEST(TruncatedDyson, constantGeneratorWithinEps) {
  Rng rng(45);
  const ComplexOperator h = random_hermitian(4, rng, 1.0);
  const double t = 0.5;
  const double eps = 0.01;
  const int K = choose_truncation_order(eps);
  const auto M = choose_discretization(t, 0.0, 1.0, eps, K);
  const auto hs = sample_hamiltonian([&](double) { return h; }, t, 4096);
  EXPECT_GE(4096u, M);
  EXPECT_LE(spectral_norm(truncated_dyson_sum(hs, K) - matrix_exponential(h, t)), eps);
}

TEST(TruncatedDyson, rotatingFieldWithinEps) {
  const double t = 0.4;
  const double eps = 0.01;
  const auto meta = measure_hamiltonian(rotating_field(), t, 256);
  const auto p = choose_dyson_parameters(t, meta.avg_deriv, meta.alpha, eps);
  EXPECT_TRUE(p.bound_backed);
  const auto hs = sample_hamiltonian(rotating_field(), t, p.M);
  const ComplexOperator exact = exact_propagator(rotating_field(), t);
  EXPECT_LE(spectral_norm(truncated_dyson_sum(hs, p.K) - exact), eps);
}

TEST(SegmentSchedule, examples) {
  auto s = segment_schedule(1.0, 1.0);
  EXPECT_EQ(s.L, 2u);
  EXPECT_DOUBLE_EQ(s.tau, 0.5);
  s = segment_schedule(0.0, 1.0);
  EXPECT_EQ(s.L, 1u);
  EXPECT_EQ(s.tau, 0.0);
  s = segment_schedule(0.3, 1.0);
  EXPECT_EQ(s.L, 1u);
  EXPECT_DOUBLE_EQ(s.tau, 0.3);
  // Measured norms carry a relative safety factor that must not add a segment.
  s = segment_schedule(1.0, 1.0 + 1e-6);
  EXPECT_EQ(s.L, 2u);
  s = segment_schedule(3.7, 2.2);
  EXPECT_EQ(s.L, 17u);
  EXPECT_LE(2.2 * s.tau, 0.5);
}

TEST(DysonParameters, unbackedRunsAreFlagged) {
  EXPECT_THROW(choose_dyson_parameters(0.1, 1.0, 1.0, 0.5), InvalidArgument);
  const auto p = choose_dyson_parameters(0.1, 1.0, 1.0, 0.5, true);
  EXPECT_FALSE(p.bound_backed);
  const auto q = choose_dyson_parameters(1.0, 1.0, 1.0, 0.05);
  EXPECT_FALSE(q.bound_backed);
  const auto r = choose_dyson_parameters(0.5, 1.0, 1.0, 0.05);
  EXPECT_TRUE(r.bound_backed);
  EXPECT_GE(r.M, static_cast<std::uint64_t>(r.K * r.K));
}

// Error split of the truncated, discretized series over random smooth
// families with max ||H|| t <= ln 2.
TEST(DysonBounds, truncationAndDiscretizationOverRandomFamilies) {
  Rng rng(46);
  for (int draw = 0; draw < 50; ++draw) {
    SmoothFamily fam{random_hermitian(4, rng, uniform(rng, 0.0, 1.0 / 3.0)),
                     random_hermitian(4, rng, uniform(rng, 0.0, 1.0 / 3.0)),
                     random_hermitian(4, rng, uniform(rng, 0.0, 1.0 / 3.0)),
                     uniform(rng, 0.5, 3.0)};
    const HamiltonianFunction gen = fam;
    const double eps = draw % 2 == 0 ? 0.05 : 0.01;
    const auto meta = measure_hamiltonian(gen, 1.0, 4096);
    const double t = uniform(rng, 0.2, std::min(1.0, 0.99 * std::numbers::ln2 / meta.alpha));
    const auto m2 = measure_hamiltonian(gen, t, 512);
    const auto p = choose_dyson_parameters(t, m2.avg_deriv, m2.alpha, eps);
    ASSERT_TRUE(p.bound_backed);
    const std::uint64_t m_ref = 8 * p.M;
    const ComplexOperator exact = exact_propagator(gen, t);
    const ComplexOperator fine = truncated_dyson_sum(sample_hamiltonian(gen, t, m_ref), p.K);
    const ComplexOperator coarse = truncated_dyson_sum(sample_hamiltonian(gen, t, p.M), p.K);
    EXPECT_LE(spectral_norm(exact - fine), eps / 2.0 + eps / 16.0) << "draw " << draw;
    EXPECT_LE(spectral_norm(coarse - fine), eps / 2.0) << "draw " << draw;
    EXPECT_LE(spectral_norm(exact - coarse), eps) << "draw " << draw;
  }
}

TEST(DysonBounds, sequenceProductError) {
  Rng rng(47);
  for (int draw = 0; draw < 50; ++draw) {
    const int n = 2 + draw % 5;
    ComplexOperator pa = ComplexOperator::Identity(3, 3);
    ComplexOperator pb = ComplexOperator::Identity(3, 3);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const ComplexOperator b = random_unitary(3, rng);
      ComplexOperator a = b + random_scaled(3, rng, uniform(rng, 0.0, 0.1));
      const double na = spectral_norm(a);
      if (na > 1.0) a /= na;
      sum += spectral_norm(a - b);
      pa = a * pa;
      pb = b * pb;
    }
    EXPECT_LE(spectral_norm(pa - pb), sum + 1e-9);
  }
}
