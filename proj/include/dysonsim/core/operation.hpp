// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dysonsim/core/register_layout.hpp"
#include "dysonsim/core/types.hpp"

namespace dysonsim {

/// Basis-state predicate: an operation acts only on indices with
/// (index & mask) == value and is the identity elsewhere.
struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
};

/// Single-bit control condition on a named register.
struct BitControl {
  std::string reg;
  int bit = 0;
  bool value = false;
};

/// A unitary acting matrix-free on state vectors laid out by a
/// RegisterLayout. Registers are referenced by name and resolved at apply
/// time, so one operation can be reused inside any layout that contains its
/// support.
class Operation {
 public:
  virtual ~Operation() = default;

  virtual void apply(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl = {}) const = 0;
  virtual void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                             ControlMask ctrl = {}) const = 0;

  /// Registers read or written by the operation.
  virtual std::vector<std::string> support() const = 0;
};

using OperationPtr = std::shared_ptr<const Operation>;

/// Applies `ops` in order (first element acts first).
class Sequence final : public Operation {
 public:
  explicit Sequence(std::vector<OperationPtr> ops);

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override;
  std::vector<std::string> support() const override;

  const std::vector<OperationPtr>& ops() const { return ops_; }

 private:
  std::vector<OperationPtr> ops_;
};

class Adjoint final : public Operation {
 public:
  explicit Adjoint(OperationPtr inner) : inner_(std::move(inner)) {}

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override {
    inner_->apply_adjoint(psi, layout, ctrl);
  }
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override {
    inner_->apply(psi, layout, ctrl);
  }
  std::vector<std::string> support() const override { return inner_->support(); }

 private:
  OperationPtr inner_;
};

/// Applies `inner` only where every bit condition holds.
class Controlled final : public Operation {
 public:
  Controlled(OperationPtr inner, std::vector<BitControl> controls);

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override;
  std::vector<std::string> support() const override;

 private:
  ControlMask resolve(const RegisterLayout& layout, ControlMask outer) const;

  OperationPtr inner_;
  std::vector<BitControl> controls_;
};

/// Multiplies the (controlled) state by a unit-modulus phase.
class GlobalPhase final : public Operation {
 public:
  explicit GlobalPhase(Complex phase);

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override;
  std::vector<std::string> support() const override { return {}; }

 private:
  Complex phase_;
};

/// I - 2|0><0| over the listed registers.
class ZeroReflection final : public Operation {
 public:
  explicit ZeroReflection(std::vector<std::string> regs) : regs_(std::move(regs)) {}

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override {
    apply(psi, layout, ctrl);
  }
  std::vector<std::string> support() const override { return regs_; }

 private:
  std::vector<std::string> regs_;
};

/// Block-diagonal unitary: on context value c, applies blocks[select[c]] to
/// the packed target registers (first target least significant); select[c]
/// < 0 means identity. With no context registers, select has one entry.
class MultiplexedUnitary final : public Operation {
 public:
  MultiplexedUnitary(std::vector<std::string> targets,
                     std::vector<std::string> context,
                     std::vector<ComplexOperator> blocks, std::vector<int> select);

  /// The same unitary on every context value.
  static std::shared_ptr<MultiplexedUnitary> uniform(
      std::vector<std::string> targets, ComplexOperator u);

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override;
  std::vector<std::string> support() const override;

 private:
  void run(StateVector& psi, const RegisterLayout& layout, ControlMask ctrl,
           const std::vector<ComplexOperator>& blocks) const;
  static bool is_power_of_two_dim(Eigen::Index n);

  std::vector<std::string> targets_;
  std::vector<std::string> context_;
  std::vector<ComplexOperator> blocks_;
  std::vector<ComplexOperator> adjoints_;
  std::vector<int> select_;
};

/// On context value c, applies a unitary whose first column is
/// states[select[c]]: a Householder reflection preceded by a phase on |0>.
/// Only the support of the state (plus index 0) is touched, so large sparse
/// preparations stay cheap. select[c] < 0 means identity.
class MultiplexedStatePreparation final : public Operation {
 public:
  using SparseState = std::vector<std::pair<std::uint64_t, Complex>>;

  MultiplexedStatePreparation(std::vector<std::string> targets,
                              std::vector<std::string> context,
                              const std::vector<SparseState>& states,
                              std::vector<int> select);

  /// Nonzero entries of a dense vector.
  static SparseState sparse(const StateVector& v);

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override;
  std::vector<std::string> support() const override;

 private:
  struct Reflector {
    Complex phase{1.0, 0.0};
    std::vector<std::uint64_t> index;  // always starts with 0
    std::vector<Complex> u;            // unit vector, or empty for no reflection
  };

  void run(StateVector& psi, const RegisterLayout& layout, ControlMask ctrl,
           bool adjoint) const;

  std::vector<std::string> targets_;
  std::vector<std::string> context_;
  std::vector<Reflector> reflectors_;
  std::vector<int> select_;
};

/// Basis permutation of the packed value of `regs` (first register least
/// significant). `forward` and `inverse` must be mutually inverse bijections.
class RegisterPermutation final : public Operation {
 public:
  using Map = std::function<std::uint64_t(std::uint64_t)>;

  RegisterPermutation(std::vector<std::string> regs, Map forward, Map inverse);

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override;
  std::vector<std::string> support() const override { return regs_; }

 private:
  void run(StateVector& psi, const RegisterLayout& layout, ControlMask ctrl,
           const Map& map) const;

  std::vector<std::string> regs_;
  Map forward_;
  Map inverse_;
};

/// Hadamard on every qubit of a register. Prepares the uniform
/// superposition from |0>; self-inverse.
class WalshHadamard final : public Operation {
 public:
  explicit WalshHadamard(std::string reg) : reg_(std::move(reg)) {}

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override;
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override {
    apply(psi, layout, ctrl);
  }
  std::vector<std::string> support() const override { return {reg_}; }

 private:
  std::string reg_;
};

/// Tally of oracle applications. Owned by a single run.
class QueryCounter {
 public:
  void increment() { ++count_; }
  void reset() { count_ = 0; }
  std::int64_t count() const { return count_; }

 private:
  std::int64_t count_ = 0;
};

/// Forwards to `inner` and counts every application of it or its adjoint.
class Instrumented final : public Operation {
 public:
  Instrumented(OperationPtr inner, std::shared_ptr<QueryCounter> counter)
      : inner_(std::move(inner)), counter_(std::move(counter)) {}

  void apply(StateVector& psi, const RegisterLayout& layout,
             ControlMask ctrl) const override {
    counter_->increment();
    inner_->apply(psi, layout, ctrl);
  }
  void apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const override {
    counter_->increment();
    inner_->apply_adjoint(psi, layout, ctrl);
  }
  std::vector<std::string> support() const override { return inner_->support(); }

  const std::shared_ptr<QueryCounter>& counter() const { return counter_; }

 private:
  OperationPtr inner_;
  std::shared_ptr<QueryCounter> counter_;
};

OperationPtr sequence(std::vector<OperationPtr> ops);
OperationPtr adjoint(OperationPtr op);
OperationPtr controlled(OperationPtr op, std::vector<BitControl> controls);

/// Throws InvalidArgument unless every register in op's support exists in
/// `layout`.
void require_support(const Operation& op, const RegisterLayout& layout);

/// Dense matrix of `op` over the whole layout. Debug path; limited to
/// tol::kDenseQubits qubits.
ComplexOperator materialize(const Operation& op, const RegisterLayout& layout);

}  // namespace dysonsim
