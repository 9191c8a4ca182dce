// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/gadgets/gadgets.hpp"

#include <algorithm>
#include <cmath>

#include "dysonsim/core/block_column.hpp"
#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"

namespace dysonsim {
namespace {

void append_unique(std::vector<std::string>& out, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
}

}  // namespace

std::uint64_t CompressionLayout::physical(int k) const {
  if (k < 0 || k > K) throw InvalidArgument("CompressionLayout: logical index out of range");
  const std::uint64_t mask = (std::uint64_t{1} << n_b) - 1;
  return (static_cast<std::uint64_t>(k) - 1) & mask;
}

int CompressionLayout::logical(std::uint64_t value) const {
  const std::uint64_t mask = (std::uint64_t{1} << n_b) - 1;
  if (value == mask) return 0;
  if (value + 1 <= static_cast<std::uint64_t>(K)) return static_cast<int>(value + 1);
  return -1;
}

CompressionLayout make_compression_layout(int K, std::vector<std::string> flags,
                                          std::string b, std::string c) {
  if (K < 0) throw InvalidArgument("compression layout: K must be >= 0");
  CompressionLayout cl;
  cl.K = K;
  cl.n_b = ceil_log2(static_cast<std::uint64_t>(K) + 1) + 1;
  cl.n_c = cl.n_b - 1;
  cl.b = std::move(b);
  cl.c = std::move(c);
  cl.flags = std::move(flags);
  return cl;
}

OperationPtr modular_adder(const std::string& reg, int qubits, std::int64_t increment) {
  if (qubits < 1 || qubits > 62) throw InvalidArgument("modular_adder: need 1..62 qubits");
  const std::uint64_t mask = (std::uint64_t{1} << qubits) - 1;
  const std::uint64_t inc = static_cast<std::uint64_t>(increment) & mask;
  return std::make_shared<RegisterPermutation>(
      std::vector<std::string>{reg},
      [mask, inc](std::uint64_t v) { return (v + inc) & mask; },
      [mask, inc](std::uint64_t v) { return (v - inc) & mask; });
}

OperationPtr controlled_success_adder(const CompressionLayout& cl) {
  std::vector<std::string> regs{cl.b, cl.c};
  append_unique(regs, cl.flags);
  const int nb = cl.n_b;
  const int nc = cl.n_c;
  const std::uint64_t bm = (std::uint64_t{1} << nb) - 1;
  const std::uint64_t cm = (std::uint64_t{1} << nc) - 1;
  auto step = [nb, nc, bm, cm](std::uint64_t v, std::uint64_t delta) {
    std::uint64_t bv = v & bm;
    std::uint64_t cv = (v >> nb) & cm;
    const std::uint64_t rest = v >> (nb + nc);
    if (rest == 0) {
      bv = (bv + delta) & bm;
    } else {
      cv = (cv + delta) & cm;
    }
    return bv | (cv << nb) | (rest << (nb + nc));
  };
  return std::make_shared<RegisterPermutation>(
      regs, [step](std::uint64_t v) { return step(v, ~std::uint64_t{0}); },
      [step](std::uint64_t v) { return step(v, 1); });
}

BlockEncoding comparator_lt_encoding(std::uint64_t M, const std::string& d,
                                     const std::string& e, const std::string& f) {
  if (!is_power_of_two(M)) {
    throw InvalidArgument("comparator_lt_encoding: M = " + std::to_string(M) +
                          " is not a power of two");
  }
  const int n = ceil_log2(M);
  const std::uint64_t m = M - 1;
  // Flips f when e >= d, so the f = 0 branch keeps e < d.
  auto comp = [n, m](std::uint64_t v) {
    const std::uint64_t j = v & m;
    const std::uint64_t i = (v >> n) & m;
    return i >= j ? v ^ (std::uint64_t{1} << (2 * n)) : v;
  };
  auto swap = [n, m](std::uint64_t v) { return ((v & m) << n) | ((v >> n) & m); };
  auto ue = std::make_shared<WalshHadamard>(e);
  auto cmp = std::make_shared<RegisterPermutation>(std::vector<std::string>{d, e, f}, comp, comp);
  auto sw = std::make_shared<RegisterPermutation>(std::vector<std::string>{d, e}, swap, swap);
  BlockEncoding enc;
  enc.layout.add(d, n);
  enc.layout.add(e, n);
  enc.layout.add(f, 1);
  enc.circuit = sequence({ue, cmp, sw, ue});
  enc.alpha = 1.0;
  enc.system = d;
  enc.ancillas = {e, f};
  return enc;
}

CompressedProduct compression_gadget(const std::vector<OperationPtr>& steps,
                                     const RegisterLayout& layout, const std::string& system,
                                     const std::vector<std::string>& flags) {
  const int K = static_cast<int>(steps.size());
  CompressedProduct g;
  g.compression = make_compression_layout(K, flags);
  const auto& cl = g.compression;
  if (layout.contains(cl.b) || layout.contains(cl.c)) {
    throw InvalidArgument("compression_gadget: counter registers already in use");
  }
  g.layout = layout;
  g.layout.add(cl.b, cl.n_b);
  g.layout.add(cl.c, cl.n_c);
  g.system = system;
  g.projected = flags;
  append_unique(g.projected, {cl.c});
  std::vector<OperationPtr> ops;
  if (K > 0) {
    const auto add_ca = controlled_success_adder(cl);
    for (const auto& step : steps) {
      if (!step) throw InvalidArgument("compression_gadget: null step");
      require_support(*step, layout);
      ops.push_back(controlled(step, {{cl.b, cl.n_b - 1, false}, {cl.c, cl.n_c - 1, false}}));
      ops.push_back(add_ca);
    }
    ops.push_back(modular_adder(cl.b, cl.n_b, K));
  }
  g.circuit = sequence(std::move(ops));
  return g;
}

CompressedProduct compression_gadget(const std::vector<BlockEncoding>& encodings) {
  if (encodings.empty()) throw InvalidArgument("compression_gadget: no encodings");
  RegisterLayout layout = encodings.front().layout;
  std::vector<std::string> flags;
  std::vector<OperationPtr> steps;
  for (const auto& enc : encodings) {
    if (enc.system != encodings.front().system ||
        enc.layout.at(enc.system).qubits != layout.at(encodings.front().system).qubits) {
      throw InvalidArgument("compression_gadget: encodings must share one system register");
    }
    layout = layout.merged_with(enc.layout);
    append_unique(flags, enc.ancillas);
    steps.push_back(enc.circuit);
  }
  return compression_gadget(steps, layout, encodings.front().system, flags);
}

ComplexOperator sector_block(const CompressedProduct& g, int k) {
  return block_at_register(*g.circuit, g.layout, g.system, g.compression.b,
                           g.compression.physical(k));
}

double sector_leakage(const CompressedProduct& g, int k) {
  return register_leakage(*g.circuit, g.layout, g.system, g.compression.b,
                          g.compression.physical(k));
}

OperationPtr coef_prep(const std::vector<Complex>& amplitudes, const CompressionLayout& cl) {
  if (amplitudes.empty() || amplitudes.size() > static_cast<std::size_t>(cl.K) + 1) {
    throw InvalidArgument("coef_prep: need between 1 and K + 1 amplitudes");
  }
  MultiplexedStatePreparation::SparseState state;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    if (amplitudes[k] != Complex(0.0, 0.0)) {
      state.emplace_back(cl.physical(static_cast<int>(k)), amplitudes[k]);
    }
  }
  return std::make_shared<MultiplexedStatePreparation>(
      std::vector<std::string>{cl.b}, std::vector<std::string>{},
      std::vector<MultiplexedStatePreparation::SparseState>{state}, std::vector<int>{0});
}

CompressedProduct dys_k(const TimeIndexedBlockEncoding& ham_t, int K, const std::string& e,
                        const std::string& f) {
  if (K < 0) throw InvalidArgument("dys_k: K must be >= 0");
  const std::uint64_t M = ham_t.layout.at(ham_t.time).dimension();
  if (M != ham_t.M) throw InvalidArgument("dys_k: time register does not hold M indices");
  if (static_cast<std::uint64_t>(K) > M) {
    throw InvalidArgument("dys_k: K = " + std::to_string(K) + " exceeds M = " +
                          std::to_string(M));
  }
  RegisterLayout layout = ham_t.layout;
  const int nd = layout.at(ham_t.time).qubits;
  layout.add(e, nd);
  layout.add(f, 1);
  // Time-ordered products need the transpose of the comparator block, which
  // moves each index to a strictly later one.
  const auto lt = comparator_lt_encoding(M, ham_t.time, e, f);
  const auto lt_dag = adjoint(lt.circuit);
  const OperationPtr u = std::make_shared<WalshHadamard>(ham_t.time);
  std::vector<OperationPtr> steps;
  for (int k = 1; k <= K; ++k) {
    if (k == 1) {
      steps.push_back(sequence({u, ham_t.circuit, u}));
    } else {
      steps.push_back(sequence({u, lt_dag, ham_t.circuit, u}));
    }
  }
  std::vector<std::string> flags = ham_t.ancillas;
  append_unique(flags, {e, f});
  auto g = compression_gadget(steps, layout, ham_t.system, flags);
  append_unique(g.projected, {ham_t.time});
  return g;
}

BlockEncoding pad_to_half(const BlockEncoding& enc, const std::string& pad) {
  const double beta = enc.alpha;
  if (!(beta > 0.0) || beta > 2.0 * (1.0 + 1e-12)) {
    throw InvalidArgument("pad_to_half: normalization " + std::to_string(beta) +
                          " is not in (0, 2]");
  }
  const double c = std::min(1.0, beta / 2.0);
  const double s = std::sqrt(1.0 - c * c);
  ComplexOperator ry(2, 2);
  ry << c, -s, s, c;
  BlockEncoding out = enc;
  out.layout.add(pad, 1);
  out.circuit = sequence({MultiplexedUnitary::uniform({pad}, ry), enc.circuit});
  out.alpha = 2.0;
  out.ancillas.push_back(pad);
  return out;
}

BlockEncoding robust_oaa(const BlockEncoding& enc) {
  if (std::abs(enc.alpha - 2.0) > 1e-12) {
    throw InvalidArgument("robust_oaa: input normalization must be exactly 2");
  }
  const OperationPtr ref = std::make_shared<ZeroReflection>(enc.ancillas);
  const OperationPtr v = enc.circuit;
  BlockEncoding out = enc;
  out.circuit = sequence({v, ref, adjoint(v), ref, v,
                          std::make_shared<GlobalPhase>(Complex(-1.0, 0.0))});
  out.alpha = 1.0;
  return out;
}

ComplexOperator oaa_block(const ComplexOperator& x) {
  return 3.0 * x - 4.0 * x * x.adjoint() * x;
}

}  // namespace dysonsim
