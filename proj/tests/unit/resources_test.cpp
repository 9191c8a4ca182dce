// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dysonsim/core/linalg.hpp"
#include "dysonsim/dyson/dyson.hpp"
#include "dysonsim/gadgets/simulation.hpp"
#include "dysonsim/models/sparse.hpp"
#include "dysonsim/resources/resources.hpp"

using namespace dysonsim;

TEST(EstimateTds, formulaChain) {
  const auto e = estimate_tds(1.0, 1.0, 0.1, 1.0, 1.0);
  EXPECT_EQ(e.L, 2u);
  EXPECT_EQ(e.K, choose_truncation_order(0.05));
  EXPECT_EQ(e.K, 3);
  EXPECT_EQ(e.queries_ham_t, 18);
  EXPECT_EQ(e.M, choose_discretization(0.5, 1.0, 1.0, 0.05, 3));
  EXPECT_EQ(e.qubits, tds_layout_qubits(1, 1, e.K, e.M));
}

TEST(EstimateTds, zeroDuration) {
  const auto e = estimate_tds(1.0, 0.0, 0.1, 0.0, 1.0);
  EXPECT_EQ(e.queries_ham_t, 0);
  EXPECT_EQ(e.queries_eA, 0);
}

TEST(EstimateTds, matchesCircuitCounters) {
  const double tau = 0.1;
  const ComplexOperator h = 0.9 * pauli::x();
  EvolveOptions opts;
  opts.backend = Backend::circuit;
  const auto run = multi_segment_evolve([&](double) { return h; }, tau, 0.05, opts);
  ASSERT_TRUE(run.resources.counted);
  const auto e = estimate_tds(run.resources.alpha, tau, 0.05, 0.0, run.resources.alpha);
  EXPECT_EQ(run.resources.queries_ham_t, e.queries_ham_t);
  EXPECT_EQ(run.resources.L, e.L);
  EXPECT_EQ(run.resources.K, e.K);
  EXPECT_EQ(run.resources.M, e.M);
  EXPECT_EQ(run.resources.qubits, e.qubits);
}

TEST(EstimateInteraction, degenerateAlphaA) {
  const auto ip = estimate_interaction(0.0, 0.7, 2.0, 0.01);
  const auto tds = estimate_tds(0.7, 2.0, 0.01, 0.0, 0.7);
  EXPECT_EQ(ip.L, tds.L);
  EXPECT_EQ(ip.K, tds.K);
  EXPECT_EQ(ip.M, tds.M);
  EXPECT_EQ(ip.queries_ham_t, tds.queries_ham_t);
}

TEST(EstimateInteraction, invariantUnderAlphaAScaling) {
  const auto base = estimate_interaction(5.0, 0.3, 1.0, 0.05);
  for (double scale : {10.0, 100.0}) {
    const auto e = estimate_interaction(5.0 * scale, 0.3, 1.0, 0.05);
    EXPECT_EQ(e.queries_ham_t, base.queries_ham_t);
    EXPECT_GT(e.M, base.M);
  }
}

TEST(EstimateInteraction, shortEvolutionUsesOneFrameStep) {
  const auto e = estimate_interaction(3.0, 0.5, 1.0, 0.01);
  EXPECT_EQ(e.queries_eA, 1);
  EXPECT_EQ(estimate_interaction(3.0, 0.25, 2.0, 0.01).queries_eA, 1);
}

TEST(EstimateInteraction, matchesCircuitCounters) {
  EvolveOptions opts;
  opts.backend = Backend::circuit;
  const auto run =
      interaction_evolve(0.2 * pauli::z(), 0.3 * pauli::x(), 0.5, 0.05, opts);
  ASSERT_TRUE(run.resources.counted);
  const auto e = estimate_interaction(run.resources.alpha_A, run.resources.alpha_B, 0.5, 0.05);
  EXPECT_EQ(run.resources.queries_ham_t, e.queries_ham_t);
  EXPECT_EQ(run.resources.queries_eA, e.queries_eA);
  EXPECT_EQ(run.resources.M, e.M);
  EXPECT_EQ(run.resources.qubits, e.qubits);
}

TEST(EstimateSparse, doublingSparsityAtMostDoublesSegments) {
  for (double t : {0.1, 0.37, 1.0, 2.5}) {
    const auto one = estimate_sparse(1, 0.8, 2, t, 0.01);
    const auto two = estimate_sparse(2, 0.8, 2, t, 0.01);
    EXPECT_LE(two.L, 2 * one.L);
    EXPECT_EQ(one.queries_ham_t,
              3 * static_cast<std::int64_t>(one.K) * static_cast<std::int64_t>(one.L));
  }
}

TEST(EstimateTts, matchesCircuitCounters) {
  const auto enc = unitary_completion(pauli::z(), 1.0);
  const auto run = tts_evolve(enc, 2.0, 1e-3);
  ASSERT_TRUE(run.counted);
  const auto e = estimate_tts(1.0, 2.0, 1e-3);
  EXPECT_EQ(run.segments, e.L);
  EXPECT_EQ(run.K, e.K);
  EXPECT_EQ(run.queries, e.queries_ham_t);
  EXPECT_EQ(run.qubits, e.qubits);
}

TEST(ComparePictures, interactionRowIgnoresAlphaA) {
  PictureModel model;
  model.alpha_A = 50.0;
  model.alpha_B = 1.0;
  const auto rows = compare_pictures(model, 1.0, 0.01);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].picture, "schrodinger_tts");
  EXPECT_EQ(rows[1].picture, "schrodinger_tds");
  EXPECT_EQ(rows[2].picture, "interaction_tds");
  model.alpha_A = 500.0;
  const auto big = compare_pictures(model, 1.0, 0.01);
  EXPECT_EQ(big[2].queries_ham_t, rows[2].queries_ham_t);
  EXPECT_GT(big[0].queries_ham_t, rows[0].queries_ham_t);
  EXPECT_GT(big[1].queries_ham_t, rows[1].queries_ham_t);
}

TEST(ComparePictures, zeroHamiltonian) {
  PictureModel model;
  model.A = ComplexOperator::Zero(2, 2);
  model.B = ComplexOperator::Zero(2, 2);
  const auto rows = compare_pictures(model, 1.0, 0.01, true);
  for (const auto& r : rows) {
    EXPECT_EQ(r.queries_ham_t, 0);
    ASSERT_TRUE(r.achieved_error.has_value());
    EXPECT_EQ(*r.achieved_error, 0.0);
  }
}

TEST(ComparePictures, simulatedErrorsWithinBudget) {
  PictureModel model;
  model.A = 2.0 * pauli::z();
  model.B = 0.4 * pauli::x();
  model.alpha_A = 2.0;
  model.alpha_B = 0.4;
  const auto rows = compare_pictures(model, 1.0, 0.01, true);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.achieved_error.has_value());
    EXPECT_LE(*r.achieved_error, 0.04) << r.picture;
  }
}

TEST(EstimateCsv, columnsAndFormatting) {
  const auto& cols = estimate_csv_columns();
  ASSERT_EQ(cols.size(), 12u);
  EXPECT_EQ(cols.front(), "picture");
  EXPECT_EQ(cols.back(), "bound_source");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.0), "0");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_number(x)), x);
  const auto row = estimate_csv_row(estimate_tds(1.0, 1.0, 0.1, 1.0, 1.0));
  EXPECT_EQ(row.rfind("schrodinger_tds,0,1,1,0.1,2,3,", 0), 0u) << row;
}

TEST(EstimateSparse, matchesCircuitCounters) {
  ComplexOperator h = ComplexOperator::Zero(4, 4);
  h(0, 1) = Complex(0.3, 0.4);
  h(1, 0) = std::conj(h(0, 1));
  h(2, 3) = Complex(0.0, -0.5);
  h(3, 2) = std::conj(h(2, 3));
  h(1, 1) = 0.2;
  const auto spec = sparse_from_matrices({h}, 2);
  EvolveOptions opts;
  opts.backend = Backend::circuit;
  const double t = 0.1;
  const auto run = sparse_evolve(spec, t, 0.05, opts);
  ASSERT_TRUE(run.resources.counted);
  const auto e = estimate_sparse(2, spec.Hmax, 2, t, 0.05);
  EXPECT_EQ(run.resources.queries_ham_t, e.queries_ham_t);
  EXPECT_EQ(run.resources.M, e.M);
  EXPECT_EQ(run.resources.qubits, e.qubits);
  EXPECT_LE(spectral_norm(run.U - matrix_exponential(h, t)), 0.2);
  opts.backend = Backend::block_algebra;
  EXPECT_LE(max_abs(sparse_evolve(spec, t, 0.05, opts).U - run.U), 1e-10);
}
