// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "dysonsim/cli/harness.hpp"
#include "dysonsim/dyson/dyson.hpp"

using namespace dysonsim;
using nlohmann::json;

namespace {

BuiltModel spins(const std::string& text) { return build_model(parse_model(json::parse(text))); }

const char* kSplit = R"({"type": "spins", "terms": [
  {"name": "field", "pauli": "ZI", "coeff": 5.0},
  {"name": "coupling", "pauli": "XX", "coeff": 0.3}],
  "alpha_split": {"A": ["field"], "B": ["coupling"]}})";

const char* kHubbard =
    R"({"type": "hubbard", "N": 2, "T": [0.0, -1.0], "U": [[0, 0], [0, 0]], "V": [1.0, 0.25]})";

const char* kSparse = R"({"type": "sparse", "dim": 4, "d": 2, "entries": [
  [0, 1, 0.3, 0.4], [1, 0, 0.3, -0.4], [1, 1, 0.2], [2, 3, 0.0, -0.5], [3, 2, 0.0, 0.5]]})";

}  // namespace

TEST(ModelSpec, rejectsMalformedDocuments) {
  EXPECT_THROW(parse_model(json::parse(R"({"type": "qudits"})")), InvalidArgument);
  EXPECT_THROW(parse_model(json::parse(R"({"type": "spins", "terms": []})")), InvalidArgument);
  EXPECT_THROW(parse_model(json::parse(
                   R"({"type": "spins", "terms": [{"pauli": "Q", "coeff": 1}]})")),
               InvalidArgument);
  EXPECT_THROW(spins(R"({"type": "spins", "terms": [{"name": "a", "pauli": "Z", "coeff": 1}],
                       "alpha_split": {"A": ["a"], "B": ["missing"]}})"),
               InvalidArgument);
  EXPECT_THROW(parse_model(json::parse(R"({"type": "hubbard", "N": 2, "T": [0, 1, 2]})")),
               InvalidArgument);
  EXPECT_THROW(load_model("/nonexistent/model.json"), IoError);
}

TEST(ModelSpec, hubbardDefaultSplitIsDiagonal) {
  const auto m = build_model(parse_model(json::parse(kHubbard)));
  EXPECT_EQ(m.dimension, 16);
  ASSERT_TRUE(m.A.has_value());
  EXPECT_TRUE(m.a_diagonal);
}

TEST(Simulate, spinZWithinBound) {
  const auto m = spins(R"({"type": "spins", "terms": [{"pauli": "Z", "coeff": 1.0}]})");
  const auto out = simulate_model(m, 0.5, 0.01, {});
  EXPECT_TRUE(out.within_bound);
  EXPECT_LE(out.report.at("achieved_error").get<double>(), 0.04);
  EXPECT_TRUE(out.report.contains("oracle_delta"));
  EXPECT_FALSE(out.report.contains("wall_clock_s"));
}

TEST(Simulate, zeroDurationIsIdentity) {
  const auto out = simulate_model(spins(kSplit), 0.0, 0.01, {});
  EXPECT_EQ(out.report.at("achieved_error").get<double>(), 0.0);
  EXPECT_EQ(out.report.at("resources").at("queries_ham_t").get<int>(), 0);
}

TEST(Simulate, hubbardInteractionMatchesEstimate) {
  const auto m = build_model(parse_model(json::parse(kHubbard)));
  SimulateOptions opts;
  opts.picture = "interaction";
  const auto out = simulate_model(m, 1.0, 1e-2, opts);
  EXPECT_LE(out.report.at("achieved_error").get<double>(), 4e-2);
  const auto rows = estimate_model(m, 1.0, 1e-2);
  const auto& ip = rows.back();
  ASSERT_EQ(ip.picture, "interaction_tds");
  const auto& p = out.report.at("parameters");
  const auto& r = out.report.at("resources");
  EXPECT_EQ(p.at("L").get<std::uint64_t>(), ip.L);
  EXPECT_EQ(p.at("K").get<int>(), ip.K);
  EXPECT_EQ(p.at("M").get<std::uint64_t>(), ip.M);
  EXPECT_EQ(r.at("queries_ham_t").get<std::int64_t>(), ip.queries_ham_t);
  EXPECT_EQ(r.at("queries_eA").get<std::int64_t>(), ip.queries_eA);
}

TEST(Simulate, rowsReconcileForEveryPicture) {
  const auto m = spins(kSplit);
  const auto rows = estimate_model(m, 0.3, 0.05);
  ASSERT_EQ(rows.size(), 3u);
  const char* pictures[] = {"taylor", "schrodinger", "interaction"};
  for (int i = 0; i < 3; ++i) {
    SimulateOptions opts;
    opts.picture = pictures[i];
    opts.backend = "block_algebra";
    const auto out = simulate_model(m, 0.3, 0.05, opts);
    EXPECT_TRUE(out.within_bound) << pictures[i];
    EXPECT_EQ(out.report.at("resources").at("queries_ham_t").get<std::int64_t>(),
              rows[i].queries_ham_t)
        << pictures[i];
    EXPECT_EQ(out.report.at("parameters").at("K").get<int>(), rows[i].K) << pictures[i];
  }
}

TEST(Simulate, sparseSchrodinger) {
  const auto m = build_model(parse_model(json::parse(kSparse)));
  const auto out = simulate_model(m, 0.1, 0.05, {});
  EXPECT_TRUE(out.within_bound);
  const auto rows = estimate_model(m, 0.1, 0.05);
  EXPECT_EQ(out.report.at("resources").at("queries_ham_t").get<std::int64_t>(),
            rows.back().queries_ham_t);
}

TEST(Estimate, zeroModelHasNoQueries) {
  const auto m = spins(R"({"type": "spins", "terms": [
    {"name": "a", "pauli": "ZI", "coeff": 0.0}, {"name": "b", "pauli": "XX", "coeff": 0.0}],
    "alpha_split": {"A": ["a"], "B": ["b"]}})");
  for (const auto& r : estimate_model(m, 1.0, 0.05)) EXPECT_EQ(r.queries_ham_t, 0) << r.picture;
}

TEST(Sweep, alphaAKeepsInteractionQueries) {
  const auto spec = parse_model(json::parse(kSplit));
  const auto rows = sweep_model(spec, "alpha_A", {5.0, 50.0, 500.0}, 1.0, 0.05);
  std::vector<std::int64_t> q;
  for (const auto& r : rows) {
    if (r.picture == "interaction_tds") q.push_back(r.queries_ham_t);
  }
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0], q[1]);
  EXPECT_EQ(q[1], q[2]);
}

TEST(Sweep, sparsityColumnMatchesCeiling) {
  const auto spec = parse_model(json::parse(kSparse));
  const auto rows = sweep_model(spec, "d", {1.0, 2.0, 4.0}, 1.0, 0.01);
  const double hmax = build_model(spec).sparse->Hmax;
  int seen = 0;
  for (const auto& r : rows) {
    if (r.picture != "sparse_tds") continue;
    const int d = 1 << seen++;
    EXPECT_EQ(r.L, static_cast<std::uint64_t>(std::ceil(2.0 * d * hmax * 1.0))) << d;
  }
  EXPECT_EQ(seen, 3);
}

TEST(Sweep, epsColumnMatchesTruncationOrder) {
  const auto spec = parse_model(json::parse(kSplit));
  for (const auto& r : sweep_model(spec, "eps", {0.1, 0.01, 0.001}, 0.2, 0.01)) {
    if (r.picture == "interaction_tds") {
      EXPECT_EQ(r.K, choose_truncation_order(r.eps / static_cast<double>(r.L)));
    }
  }
}

TEST(Sweep, emptyValuesGiveHeaderOnly) {
  const auto spec = parse_model(json::parse(kSplit));
  const auto csv = estimates_to_csv(sweep_model(spec, "t", {}, 1.0, 0.01));
  EXPECT_EQ(csv,
            "picture,alpha_A,alpha_B,t,eps,L,K,M,queries_ham_t,queries_eA,qubits,bound_source\n");
  EXPECT_THROW(sweep_model(spec, "omega", {1.0}, 1.0, 0.01), InvalidArgument);
}

TEST(Sweep, latticeSize) {
  const auto spec = parse_model(json::parse(kHubbard));
  const auto rows = sweep_model(spec, "N", {2.0, 3.0}, 0.5, 0.05);
  EXPECT_EQ(rows.size(), 6u);
}

TEST(Verify, deterministicAndPassing) {
  const auto a = run_verify("all", 42);
  const auto b = run_verify("all", 42);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.summary.dump(), b.summary.dump());
  EXPECT_THROW(run_verify("bogus", 1), InvalidArgument);
}

TEST(Verify, tamperedToleranceFails) {
  const auto r = run_verify("gadgets", 3, {{"gadgets.tds_segment_error", 0.0}});
  EXPECT_FALSE(r.pass);
  bool named = false;
  for (const auto& c : r.summary.at("checks")) {
    if (c.at("name") == "gadgets.tds_segment_error") named = !c.at("pass").get<bool>();
  }
  EXPECT_TRUE(named);
  EXPECT_THROW(run_verify("core", 3, {{"no.such.check", 0.0}}), InvalidArgument);
}
