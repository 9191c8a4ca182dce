// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/core/operation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {
namespace {

// Calls fn(index) for every basis index whose `fixed` bits are zero and whose
// control bits match.
template <typename F>
void for_each_base(const RegisterLayout& layout, std::uint64_t fixed,
                   ControlMask ctrl, F&& fn) {
  if (ctrl.mask & fixed) {
    throw InvalidArgument("control qubits overlap the target registers");
  }
  const std::uint64_t full = layout.dimension() - 1;
  const std::uint64_t free = full & ~fixed & ~ctrl.mask;
  const std::uint64_t value = ctrl.value & ctrl.mask;
  std::uint64_t x = 0;
  do {
    fn(x | value);
    x = (x - free) & free;
  } while (x != 0);
}

std::vector<std::uint64_t> packed_offsets(const RegisterLayout& layout,
                                          const std::vector<std::string>& regs) {
  const int n = layout.qubits_of(regs);
  std::vector<std::uint64_t> off(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < off.size(); ++v) {
    off[v] = layout.deposit_all(0, regs, v);
  }
  return off;
}

void require_state(const StateVector& psi, const RegisterLayout& layout) {
  if (static_cast<std::uint64_t>(psi.size()) != layout.dimension()) {
    throw InvalidArgument("state dimension " + std::to_string(psi.size()) +
                          " does not match layout " + layout.describe());
  }
}

}  // namespace

Sequence::Sequence(std::vector<OperationPtr> ops) : ops_(std::move(ops)) {
  for (const auto& op : ops_) {
    if (!op) throw InvalidArgument("Sequence: null operation");
  }
}

void Sequence::apply(StateVector& psi, const RegisterLayout& layout,
                     ControlMask ctrl) const {
  for (const auto& op : ops_) op->apply(psi, layout, ctrl);
}

void Sequence::apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                             ControlMask ctrl) const {
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    (*it)->apply_adjoint(psi, layout, ctrl);
  }
}

std::vector<std::string> Sequence::support() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    for (auto& r : op->support()) {
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  return out;
}

Controlled::Controlled(OperationPtr inner, std::vector<BitControl> controls)
    : inner_(std::move(inner)), controls_(std::move(controls)) {
  const auto sup = inner_->support();
  for (const auto& c : controls_) {
    if (std::find(sup.begin(), sup.end(), c.reg) != sup.end()) {
      throw InvalidArgument("control register '" + c.reg +
                            "' is also a target of the controlled operation");
    }
  }
}

ControlMask Controlled::resolve(const RegisterLayout& layout,
                                ControlMask outer) const {
  ControlMask out = outer;
  for (const auto& c : controls_) {
    const auto& r = layout.at(c.reg);
    if (c.bit < 0 || c.bit >= r.qubits) {
      throw InvalidArgument("control bit out of range for register '" + c.reg + "'");
    }
    const std::uint64_t m = std::uint64_t{1} << (r.offset + c.bit);
    if (out.mask & m) throw InvalidArgument("duplicate control on '" + c.reg + "'");
    out.mask |= m;
    if (c.value) out.value |= m;
  }
  return out;
}

void Controlled::apply(StateVector& psi, const RegisterLayout& layout,
                       ControlMask ctrl) const {
  inner_->apply(psi, layout, resolve(layout, ctrl));
}

void Controlled::apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                               ControlMask ctrl) const {
  inner_->apply_adjoint(psi, layout, resolve(layout, ctrl));
}

std::vector<std::string> Controlled::support() const {
  auto out = inner_->support();
  for (const auto& c : controls_) {
    if (std::find(out.begin(), out.end(), c.reg) == out.end()) out.push_back(c.reg);
  }
  return out;
}

GlobalPhase::GlobalPhase(Complex phase) : phase_(phase) {
  if (std::abs(std::abs(phase) - 1.0) > tol::kUnitaryOutput) {
    throw InvalidArgument("GlobalPhase: phase must have unit modulus");
  }
}

void GlobalPhase::apply(StateVector& psi, const RegisterLayout& layout,
                        ControlMask ctrl) const {
  require_state(psi, layout);
  if (ctrl.mask == 0) {
    psi *= phase_;
    return;
  }
  for_each_base(layout, 0, ctrl, [&](std::uint64_t i) { psi[i] *= phase_; });
}

void GlobalPhase::apply_adjoint(StateVector& psi, const RegisterLayout& layout,
                                ControlMask ctrl) const {
  GlobalPhase(std::conj(phase_)).apply(psi, layout, ctrl);
}

void ZeroReflection::apply(StateVector& psi, const RegisterLayout& layout,
                           ControlMask ctrl) const {
  require_state(psi, layout);
  for_each_base(layout, layout.mask_of(regs_), ctrl,
                [&](std::uint64_t i) { psi[i] = -psi[i]; });
}

MultiplexedUnitary::MultiplexedUnitary(std::vector<std::string> targets,
                                       std::vector<std::string> context,
                                       std::vector<ComplexOperator> blocks,
                                       std::vector<int> select)
    : targets_(std::move(targets)),
      context_(std::move(context)),
      blocks_(std::move(blocks)),
      select_(std::move(select)) {
  if (select_.empty()) throw InvalidArgument("MultiplexedUnitary: empty selector");
  for (int s : select_) {
    if (s >= static_cast<int>(blocks_.size())) {
      throw InvalidArgument("MultiplexedUnitary: selector out of range");
    }
  }
  adjoints_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.rows() != b.cols() || !is_power_of_two_dim(b.rows())) {
      throw InvalidArgument("MultiplexedUnitary: blocks must be square with power-of-two size");
    }
    adjoints_.push_back(b.adjoint());
  }
}

bool MultiplexedUnitary::is_power_of_two_dim(Eigen::Index n) {
  return n > 0 && (n & (n - 1)) == 0;
}

std::shared_ptr<MultiplexedUnitary> MultiplexedUnitary::uniform(
    std::vector<std::string> targets, ComplexOperator u) {
  std::vector<ComplexOperator> blocks{std::move(u)};
  return std::make_shared<MultiplexedUnitary>(std::move(targets),
                                              std::vector<std::string>{},
                                              std::move(blocks), std::vector<int>{0});
}

void MultiplexedUnitary::apply(StateVector& psi, const RegisterLayout& layout,
                               ControlMask ctrl) const {
  run(psi, layout, ctrl, blocks_);
}

void MultiplexedUnitary::apply_adjoint(StateVector& psi,
                                       const RegisterLayout& layout,
                                       ControlMask ctrl) const {
  run(psi, layout, ctrl, adjoints_);
}

std::vector<std::string> MultiplexedUnitary::support() const {
  auto out = targets_;
  out.insert(out.end(), context_.begin(), context_.end());
  return out;
}

void MultiplexedUnitary::run(StateVector& psi, const RegisterLayout& layout,
                             ControlMask ctrl,
                             const std::vector<ComplexOperator>& blocks) const {
  require_state(psi, layout);
  const auto off = packed_offsets(layout, targets_);
  const auto d = static_cast<Eigen::Index>(off.size());
  for (const auto& b : blocks) {
    if (b.rows() != d) {
      throw InvalidArgument("MultiplexedUnitary: block size " +
                            std::to_string(b.rows()) + " does not match targets of size " +
                            std::to_string(d));
    }
  }
  const int ctx_qubits = layout.qubits_of(context_);
  if (select_.size() != 1 && select_.size() != (std::size_t{1} << ctx_qubits)) {
    throw InvalidArgument("MultiplexedUnitary: selector size does not match context registers");
  }
  for (const auto& r : context_) {
    if (std::find(targets_.begin(), targets_.end(), r) != targets_.end()) {
      throw InvalidArgument("MultiplexedUnitary: register '" + r +
                            "' is both target and context");
    }
  }
  const bool single = select_.size() == 1;
  std::vector<Complex> in(d), out(d);
  for_each_base(layout, layout.mask_of(targets_), ctrl, [&](std::uint64_t base) {
    const int s = single ? select_[0] : select_[layout.extract_all(base, context_)];
    if (s < 0) return;
    const ComplexOperator& u = blocks[s];
    for (Eigen::Index j = 0; j < d; ++j) in[j] = psi[base | off[j]];
    for (Eigen::Index i = 0; i < d; ++i) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index j = 0; j < d; ++j) acc += u(i, j) * in[j];
      out[i] = acc;
    }
    for (Eigen::Index i = 0; i < d; ++i) psi[base | off[i]] = out[i];
  });
}

MultiplexedStatePreparation::MultiplexedStatePreparation(
    std::vector<std::string> targets, std::vector<std::string> context,
    const std::vector<SparseState>& states, std::vector<int> select)
    : targets_(std::move(targets)), context_(std::move(context)), select_(std::move(select)) {
  if (select_.empty()) throw InvalidArgument("MultiplexedStatePreparation: empty selector");
  for (int s : select_) {
    if (s >= static_cast<int>(states.size())) {
      throw InvalidArgument("MultiplexedStatePreparation: selector out of range");
    }
  }
  reflectors_.reserve(states.size());
  for (const auto& state : states) {
    SparseState v = state;
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    double norm2 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0 && v[i].first == v[i - 1].first) {
        throw InvalidArgument("MultiplexedStatePreparation: repeated basis index");
      }
      norm2 += std::norm(v[i].second);
    }
    if (std::abs(norm2 - 1.0) > tol::kHermitianInput) {
      throw InvalidArgument("MultiplexedStatePreparation: state is not normalized");
    }
    Reflector r;
    Complex v0{0.0, 0.0};
    if (!v.empty() && v.front().first == 0) v0 = v.front().second;
    const double a0 = std::abs(v0);
    if (a0 > 0.0) r.phase = v0 / a0;
    // u = e0 - w with w = v / phase; (I - 2uu^+) maps e0 to w.
    r.index.push_back(0);
    r.u.push_back(1.0 - a0);
    for (const auto& [i, amp] : v) {
      if (i == 0) continue;
      r.index.push_back(i);
      r.u.push_back(-std::conj(r.phase) * amp);
    }
    double un = 0.0;
    for (const auto& x : r.u) un += std::norm(x);
    if (un < 1e-30) {
      r.index.clear();
      r.u.clear();
    } else {
      for (auto& x : r.u) x /= std::sqrt(un);
    }
    reflectors_.push_back(std::move(r));
  }
}

MultiplexedStatePreparation::SparseState MultiplexedStatePreparation::sparse(
    const StateVector& v) {
  SparseState out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != Complex(0.0, 0.0)) out.emplace_back(static_cast<std::uint64_t>(i), v[i]);
  }
  return out;
}

void MultiplexedStatePreparation::apply(StateVector& psi, const RegisterLayout& layout,
                                        ControlMask ctrl) const {
  run(psi, layout, ctrl, false);
}

void MultiplexedStatePreparation::apply_adjoint(StateVector& psi,
                                                const RegisterLayout& layout,
                                                ControlMask ctrl) const {
  run(psi, layout, ctrl, true);
}

std::vector<std::string> MultiplexedStatePreparation::support() const {
  auto out = targets_;
  out.insert(out.end(), context_.begin(), context_.end());
  return out;
}

void MultiplexedStatePreparation::run(StateVector& psi, const RegisterLayout& layout,
                                      ControlMask ctrl, bool adjoint) const {
  require_state(psi, layout);
  const int tq = layout.qubits_of(targets_);
  const std::uint64_t tdim = std::uint64_t{1} << tq;
  for (const auto& r : reflectors_) {
    if (!r.index.empty() && r.index.back() >= tdim) {
      throw InvalidArgument("MultiplexedStatePreparation: state longer than target registers");
    }
  }
  const int ctx_qubits = layout.qubits_of(context_);
  if (select_.size() != 1 && select_.size() != (std::size_t{1} << ctx_qubits)) {
    throw InvalidArgument(
        "MultiplexedStatePreparation: selector size does not match context registers");
  }
  const bool single = select_.size() == 1;
  // Offsets are computed lazily: only indices in some support are needed.
  std::vector<std::uint64_t> off_cache;
  const bool dense_offsets = tq <= 16;
  if (dense_offsets) off_cache = packed_offsets(layout, targets_);
  auto offset = [&](std::uint64_t v) {
    return dense_offsets ? off_cache[v] : layout.deposit_all(0, targets_, v);
  };
  std::vector<Complex> in;
  for_each_base(layout, layout.mask_of(targets_), ctrl, [&](std::uint64_t base) {
    const int s = single ? select_[0] : select_[layout.extract_all(base, context_)];
    if (s < 0) return;
    const Reflector& r = reflectors_[s];
    const Complex ph = adjoint ? std::conj(r.phase) : r.phase;
    // Forward: reflection after the phase on |0>; adjoint reverses the order.
    if (!adjoint) psi[base] *= ph;
    if (!r.u.empty()) {
      const std::size_t n = r.index.size();
      in.resize(n);
      Complex dot{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) {
        in[i] = psi[base | offset(r.index[i])];
        dot += std::conj(r.u[i]) * in[i];
      }
      for (std::size_t i = 0; i < n; ++i) {
        psi[base | offset(r.index[i])] = in[i] - 2.0 * r.u[i] * dot;
      }
    }
    if (adjoint) psi[base] *= ph;
  });
}

RegisterPermutation::RegisterPermutation(std::vector<std::string> regs,
                                         Map forward, Map inverse)
    : regs_(std::move(regs)), forward_(std::move(forward)), inverse_(std::move(inverse)) {}

void RegisterPermutation::apply(StateVector& psi, const RegisterLayout& layout,
                                ControlMask ctrl) const {
  run(psi, layout, ctrl, forward_);
}

void RegisterPermutation::apply_adjoint(StateVector& psi,
                                        const RegisterLayout& layout,
                                        ControlMask ctrl) const {
  run(psi, layout, ctrl, inverse_);
}

void RegisterPermutation::run(StateVector& psi, const RegisterLayout& layout,
                              ControlMask ctrl, const Map& map) const {
  require_state(psi, layout);
  const auto off = packed_offsets(layout, regs_);
  const std::uint64_t d = off.size();
  std::vector<std::uint64_t> table(d);
  std::vector<char> hit(d, 0);
  for (std::uint64_t v = 0; v < d; ++v) {
    const std::uint64_t w = map(v);
    if (w >= d || hit[w]) {
      throw InvalidArgument("RegisterPermutation: map is not a bijection");
    }
    hit[w] = 1;
    table[v] = w;
  }
  std::vector<Complex> buf(d);
  for_each_base(layout, layout.mask_of(regs_), ctrl, [&](std::uint64_t base) {
    for (std::uint64_t v = 0; v < d; ++v) buf[v] = psi[base | off[v]];
    for (std::uint64_t v = 0; v < d; ++v) psi[base | off[table[v]]] = buf[v];
  });
}

void WalshHadamard::apply(StateVector& psi, const RegisterLayout& layout,
                          ControlMask ctrl) const {
  require_state(psi, layout);
  const auto& r = layout.at(reg_);
  const double h = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < r.qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (r.offset + q);
    for_each_base(layout, bit, ctrl, [&](std::uint64_t i) {
      const Complex a = psi[i];
      const Complex b = psi[i | bit];
      psi[i] = h * (a + b);
      psi[i | bit] = h * (a - b);
    });
  }
}

OperationPtr sequence(std::vector<OperationPtr> ops) {
  return std::make_shared<Sequence>(std::move(ops));
}

OperationPtr adjoint(OperationPtr op) { return std::make_shared<Adjoint>(std::move(op)); }

OperationPtr controlled(OperationPtr op, std::vector<BitControl> controls) {
  return std::make_shared<Controlled>(std::move(op), std::move(controls));
}

void require_support(const Operation& op, const RegisterLayout& layout) {
  for (const auto& r : op.support()) {
    if (!layout.contains(r)) {
      throw InvalidArgument("operation acts on register '" + r +
                            "' missing from layout " + layout.describe());
    }
  }
}

ComplexOperator materialize(const Operation& op, const RegisterLayout& layout) {
  if (layout.total_qubits() > tol::kDenseQubits) {
    throw BudgetExceeded("materialize: layout too large for a dense matrix",
                         layout.total_qubits(), tol::kDenseQubits);
  }
  require_support(op, layout);
  const auto n = static_cast<Eigen::Index>(layout.dimension());
  ComplexOperator out(n, n);
  StateVector psi(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    psi.setZero();
    psi[j] = 1.0;
    op.apply(psi, layout);
    out.col(j) = psi;
  }
  return out;
}

}  // namespace dysonsim
