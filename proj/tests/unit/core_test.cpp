// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "dysonsim/core/block_column.hpp"
#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/operation.hpp"
#include "dysonsim/core/random.hpp"
#include "dysonsim/core/register_layout.hpp"

using namespace dysonsim;

namespace {

// Power iteration on A^dag A; independent of the SVD used by spectral_norm.
double power_iteration_norm(const ComplexOperator& a, Rng& rng) {
  StateVector v = random_state(a.cols(), rng);
  double est = 0.0;
  for (int it = 0; it < 5000; ++it) {
    StateVector w = a.adjoint() * (a * v);
    const double n = w.norm();
    if (n == 0.0) return 0.0;
    const double next = std::sqrt(n);
    v = w / n;
    if (std::abs(next - est) < 1e-15 * next) return next;
    est = next;
  }
  return est;
}

}  // namespace

TEST(MatrixExponential, zeroGeneratorGivesIdentity) {
  const ComplexOperator u = matrix_exponential(ComplexOperator::Zero(2, 2), 1.0);
  EXPECT_LE(max_abs(u - ComplexOperator::Identity(2, 2)), 1e-15);
}

TEST(MatrixExponential, pauliZAtPiIsMinusIdentity) {
  const ComplexOperator u = matrix_exponential(pauli::z(), std::numbers::pi);
  EXPECT_LE(max_abs(u + ComplexOperator::Identity(2, 2)), 1e-12);
}

TEST(MatrixExponential, matchesScalingAndSquaring) {
  Rng rng(11);
  const ComplexOperator h = random_hermitian(4, rng, 1.7);
  const ComplexOperator ours = matrix_exponential(h, 0.3);
  const ComplexOperator generator = Complex(0.0, -0.3) * h;
  const ComplexOperator reference = generator.exp();
  EXPECT_LE(max_abs(ours - reference), 1e-10);
  EXPECT_LE(unitarity_defect(ours), 1e-10);
}

TEST(MatrixExponential, groupLaw) {
  Rng rng(12);
  for (int draw = 0; draw < 20; ++draw) {
    const ComplexOperator h = random_hermitian(4, rng, uniform(rng, 0.1, 3.0));
    const double a = uniform(rng, -1.0, 1.0);
    const double b = uniform(rng, -1.0, 1.0);
    const ComplexOperator lhs = matrix_exponential(h, a + b);
    const ComplexOperator rhs = matrix_exponential(h, a) * matrix_exponential(h, b);
    EXPECT_LE(max_abs(lhs - rhs), 1e-9);
  }
}

TEST(MatrixExponential, rejectsNonHermitian) {
  ComplexOperator h = pauli::x();
  h(0, 1) = 2.0;
  EXPECT_THROW(matrix_exponential(h, 1.0), InvalidArgument);
  EXPECT_THROW(matrix_exponential(ComplexOperator::Zero(2, 3), 1.0), InvalidArgument);
}

TEST(HermitianPsdSqrt, closedForms) {
  EXPECT_LE(max_abs(hermitian_psd_sqrt(ComplexOperator::Identity(3, 3)) -
                    ComplexOperator::Identity(3, 3)),
            1e-14);
  ComplexOperator p = ComplexOperator::Zero(2, 2);
  p(0, 0) = 4.0;
  p(1, 1) = 9.0;
  ComplexOperator s = ComplexOperator::Zero(2, 2);
  s(0, 0) = 2.0;
  s(1, 1) = 3.0;
  EXPECT_LE(max_abs(hermitian_psd_sqrt(p) - s), 1e-14);
}

TEST(HermitianPsdSqrt, reconstructsDilationDefect) {
  Rng rng(13);
  for (int draw = 0; draw < 10; ++draw) {
    const ComplexOperator a = random_scaled(4, rng, uniform(rng, 0.1, 1.0));
    const ComplexOperator p = ComplexOperator::Identity(4, 4) - a.adjoint() * a;
    const ComplexOperator s = hermitian_psd_sqrt(p);
    EXPECT_LE(max_abs(s * s - p), 1e-10);
    EXPECT_LE(hermiticity_defect(s), 1e-12);
  }
}

TEST(HermitianPsdSqrt, rejectsNegativeEigenvalue) {
  EXPECT_THROW(hermitian_psd_sqrt(-ComplexOperator::Identity(2, 2)), InvalidArgument);
  const ComplexOperator tiny = -1e-13 * ComplexOperator::Identity(2, 2);
  EXPECT_LE(max_abs(hermitian_psd_sqrt(tiny)), 1e-15);
}

TEST(SpectralNorm, closedForms) {
  EXPECT_NEAR(spectral_norm(pauli::x()), 1.0, 1e-14);
  ComplexOperator d = ComplexOperator::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -5.0;
  EXPECT_NEAR(spectral_norm(d), 5.0, 1e-14);
}

TEST(SpectralNorm, matchesPowerIteration) {
  Rng rng(14);
  for (int draw = 0; draw < 10; ++draw) {
    const ComplexOperator a = random_gaussian(8, 8, rng);
    const double svd = spectral_norm(a);
    EXPECT_NEAR(power_iteration_norm(a, rng), svd, 1e-9 * svd);
  }
}

TEST(SpectralNorm, submultiplicative) {
  Rng rng(15);
  for (int draw = 0; draw < 50; ++draw) {
    const ComplexOperator a = random_gaussian(5, 5, rng);
    const ComplexOperator b = random_gaussian(5, 5, rng);
    EXPECT_LE(spectral_norm(a * b), spectral_norm(a) * spectral_norm(b) + 1e-9);
  }
}

TEST(Pauli, stringOrdering) {
  const ComplexOperator xz = pauli::from_string("XZ");
  EXPECT_LE(max_abs(xz - kron(pauli::x(), pauli::z())), 0.0);
  EXPECT_THROW(pauli::from_string("XQ"), InvalidArgument);
}

TEST(RegisterLayout, offsetsAndPacking) {
  RegisterLayout layout;
  layout.add("s", 2).add("a", 1).add("z", 0).add("b", 3);
  EXPECT_EQ(layout.total_qubits(), 6);
  EXPECT_EQ(layout.at("a").offset, 2);
  EXPECT_EQ(layout.at("b").offset, 3);
  EXPECT_EQ(layout.at("z").dimension(), 1u);
  const std::uint64_t idx = layout.deposit(layout.deposit(0, "s", 3), "b", 5);
  EXPECT_EQ(layout.extract(idx, "s"), 3u);
  EXPECT_EQ(layout.extract(idx, "b"), 5u);
  const std::vector<std::string> sb{"s", "b"};
  EXPECT_EQ(layout.extract_all(idx, sb), 3u + (5u << 2));
  EXPECT_EQ(layout.deposit_all(0, sb, 3u + (5u << 2)), idx);
  EXPECT_THROW(layout.add("s", 1), InvalidArgument);
  EXPECT_THROW(layout.at("q"), InvalidArgument);
}

TEST(Operations, identityBlockColumn) {
  RegisterLayout layout;
  layout.add("s", 2).add("a", 1);
  const auto id = sequence({});
  for (std::uint64_t j = 0; j < 4; ++j) {
    const StateVector out = apply_block_column(*id, layout, {"a"}, j);
    const StateVector col = project_ancillas_zero(out, layout, {"a"});
    for (Eigen::Index i = 0; i < 4; ++i) {
      EXPECT_EQ(col[i], Complex(i == static_cast<Eigen::Index>(j) ? 1.0 : 0.0));
    }
  }
  EXPECT_THROW(apply_block_column(*id, layout, {"a"}, 4), InvalidArgument);
  EXPECT_THROW(apply_block_column(*id, layout, {"q"}, 0), InvalidArgument);
}

TEST(Operations, multiplexedMatchesDenseKron) {
  Rng rng(16);
  RegisterLayout layout;
  layout.add("s", 1).add("d", 2).add("a", 1);
  std::vector<ComplexOperator> blocks;
  for (int m = 0; m < 4; ++m) blocks.push_back(random_unitary(4, rng));
  const auto op = std::make_shared<MultiplexedUnitary>(
      std::vector<std::string>{"s", "a"}, std::vector<std::string>{"d"}, blocks,
      std::vector<int>{0, 1, 2, 3});
  const ComplexOperator dense = materialize(*op, layout);
  EXPECT_LE(unitarity_defect(dense), 1e-12);
  // Build the same operator from index arithmetic.
  ComplexOperator expect = ComplexOperator::Zero(16, 16);
  for (std::uint64_t col = 0; col < 16; ++col) {
    const std::uint64_t d = layout.extract(col, "d");
    const std::uint64_t j = layout.extract(col, "s") + 2 * layout.extract(col, "a");
    for (std::uint64_t i = 0; i < 4; ++i) {
      std::uint64_t row = layout.deposit(layout.deposit(col, "s", i & 1), "a", i >> 1);
      expect(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          blocks[d](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  EXPECT_LE(max_abs(dense - expect), 1e-15);
  StateVector psi = random_state(16, rng);
  const StateVector orig = psi;
  op->apply(psi, layout, {});
  op->apply_adjoint(psi, layout, {});
  EXPECT_LE((psi - orig).norm(), 1e-12);
}

TEST(Operations, controlledActsOnlyOnMatchingBits) {
  RegisterLayout layout;
  layout.add("s", 1).add("b", 2);
  const auto x = MultiplexedUnitary::uniform({"s"}, pauli::x());
  const auto cx = controlled(x, {{"b", 1, false}, {"b", 0, true}});
  const ComplexOperator dense = materialize(*cx, layout);
  for (std::uint64_t col = 0; col < 8; ++col) {
    const std::uint64_t b = layout.extract(col, "b");
    const std::uint64_t row = b == 1 ? (col ^ 1u) : col;
    EXPECT_EQ(dense(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)),
              Complex(1.0));
  }
  EXPECT_THROW(controlled(x, {{"s", 0, true}}), InvalidArgument);
}

TEST(Operations, permutationAndReflection) {
  RegisterLayout layout;
  layout.add("b", 2).add("c", 1);
  const auto inc = std::make_shared<RegisterPermutation>(
      std::vector<std::string>{"b"}, [](std::uint64_t v) { return (v + 1) % 4; },
      [](std::uint64_t v) { return (v + 3) % 4; });
  const ComplexOperator p = materialize(*inc, layout);
  EXPECT_EQ(p(0, 3), Complex(1.0));
  EXPECT_EQ(p(4, 7), Complex(1.0));
  const ComplexOperator ref = materialize(ZeroReflection({"b"}), layout);
  for (Eigen::Index i = 0; i < 8; ++i) {
    const double expect = (i & 3) == 0 ? -1.0 : 1.0;
    EXPECT_EQ(ref(i, i), Complex(expect));
  }
  const auto bad = std::make_shared<RegisterPermutation>(
      std::vector<std::string>{"b"}, [](std::uint64_t) { return 0u; },
      [](std::uint64_t) { return 0u; });
  StateVector psi = StateVector::Zero(8);
  EXPECT_THROW(bad->apply(psi, layout, {}), InvalidArgument);
}

TEST(Operations, walshHadamardPreparesUniformState) {
  RegisterLayout layout;
  layout.add("d", 3);
  StateVector psi = StateVector::Zero(8);
  psi[0] = 1.0;
  WalshHadamard("d").apply(psi, layout, {});
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_NEAR(psi[i].real(), 1.0 / std::sqrt(8.0), 1e-15);
}

TEST(Operations, instrumentedCountsEveryApplication) {
  RegisterLayout layout;
  layout.add("s", 1);
  auto counter = std::make_shared<QueryCounter>();
  const auto op = std::make_shared<Instrumented>(
      MultiplexedUnitary::uniform({"s"}, pauli::x()), counter);
  StateVector psi = StateVector::Zero(2);
  psi[0] = 1.0;
  for (int i = 0; i < 5; ++i) op->apply(psi, layout, {});
  op->apply_adjoint(psi, layout, {});
  EXPECT_EQ(counter->count(), 6);
  counter->reset();
  EXPECT_EQ(counter->count(), 0);
}

TEST(Operations, normPreservedOnRandomStates) {
  Rng rng(17);
  RegisterLayout layout;
  layout.add("s", 2).add("d", 2).add("a", 1);
  std::vector<ComplexOperator> blocks;
  for (int m = 0; m < 4; ++m) blocks.push_back(random_unitary(8, rng));
  const auto circuit = sequence(
      {std::make_shared<WalshHadamard>("d"),
       std::make_shared<MultiplexedUnitary>(std::vector<std::string>{"s", "a"},
                                            std::vector<std::string>{"d"}, blocks,
                                            std::vector<int>{0, 1, -1, 3}),
       std::make_shared<ZeroReflection>(std::vector<std::string>{"a", "d"}),
       std::make_shared<GlobalPhase>(Complex(0.0, 1.0))});
  for (int draw = 0; draw < 100; ++draw) {
    StateVector psi = random_state(32, rng);
    circuit->apply(psi, layout, {});
    EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
  }
}
