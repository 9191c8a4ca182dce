// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/encoding/block_encoding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dysonsim/core/block_column.hpp"
#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {
namespace {

int qubits_for_dimension(Eigen::Index dim, const char* what) {
  if (dim < 1 || !is_power_of_two(static_cast<std::uint64_t>(dim))) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " is not a power of two";
    throw InvalidArgument(os.str());
  }
  return ceil_log2(static_cast<std::uint64_t>(dim));
}

// [[A, sqrt(I - AA^+)], [sqrt(I - A^+A), -A^+]]
ComplexOperator completion_matrix(const ComplexOperator& a) {
  const Eigen::Index n = a.rows();
  const ComplexOperator id = ComplexOperator::Identity(n, n);
  ComplexOperator u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = a;
  u.topRightCorner(n, n) = hermitian_psd_sqrt(id - a * a.adjoint());
  u.bottomLeftCorner(n, n) = hermitian_psd_sqrt(id - a.adjoint() * a);
  u.bottomRightCorner(n, n) = -a.adjoint();
  return u;
}

void require_within_alpha(const ComplexOperator& h, double alpha, const char* what) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument(std::string(what) + ": alpha must be positive and finite");
  }
  if (!all_finite(h)) throw InvalidArgument(std::string(what) + ": non-finite entries");
  const double norm = spectral_norm(h);
  if (norm > alpha * (1.0 + tol::kHermitianInput)) {
    std::ostringstream os;
    os << what << ": ||H|| = " << norm << " exceeds alpha = " << alpha;
    throw InvalidArgument(os.str());
  }
}

}  // namespace

BlockEncoding unitary_completion(const ComplexOperator& h, double alpha,
                                 const std::string& system, const std::string& ancilla) {
  if (h.rows() != h.cols()) throw InvalidArgument("unitary_completion: H must be square");
  const int ns = qubits_for_dimension(h.rows(), "unitary_completion");
  require_within_alpha(h, alpha, "unitary_completion");
  BlockEncoding enc;
  enc.layout.add(system, ns);
  enc.layout.add(ancilla, 1);
  enc.circuit = MultiplexedUnitary::uniform({system, ancilla}, completion_matrix(h / alpha));
  enc.alpha = alpha;
  enc.system = system;
  enc.ancillas = {ancilla};
  return enc;
}

BlockEncoding lcu_encode(const std::vector<double>& coeffs,
                         const std::vector<ComplexOperator>& unitaries,
                         const std::string& system, const std::string& ancilla) {
  if (coeffs.empty() || coeffs.size() != unitaries.size()) {
    throw InvalidArgument("lcu_encode: need one positive coefficient per unitary");
  }
  const Eigen::Index dim = unitaries.front().rows();
  const int ns = qubits_for_dimension(dim, "lcu_encode");
  double alpha = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!(coeffs[j] > 0.0) || !std::isfinite(coeffs[j])) {
      throw InvalidArgument("lcu_encode: coefficients must be positive and finite");
    }
    if (unitaries[j].rows() != dim || unitaries[j].cols() != dim) {
      throw InvalidArgument("lcu_encode: unitaries must share one square shape");
    }
    if (unitarity_defect(unitaries[j]) > tol::kUnitaryOutput) {
      throw InvalidArgument("lcu_encode: term " + std::to_string(j) + " is not unitary");
    }
    alpha += coeffs[j];
  }
  const int na = std::max(1, ceil_log2(coeffs.size()));
  MultiplexedStatePreparation::SparseState amps;
  std::vector<int> select(std::size_t{1} << na, -1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    amps.emplace_back(j, std::sqrt(coeffs[j] / alpha));
    select[j] = static_cast<int>(j);
  }
  auto prep = std::make_shared<MultiplexedStatePreparation>(
      std::vector<std::string>{ancilla}, std::vector<std::string>{},
      std::vector<MultiplexedStatePreparation::SparseState>{amps}, std::vector<int>{0});
  auto sel = std::make_shared<MultiplexedUnitary>(std::vector<std::string>{system},
                                                  std::vector<std::string>{ancilla},
                                                  unitaries, select);
  BlockEncoding enc;
  enc.layout.add(system, ns);
  enc.layout.add(ancilla, na);
  enc.circuit = sequence({prep, sel, adjoint(prep)});
  enc.alpha = alpha;
  enc.system = system;
  enc.ancillas = {ancilla};
  return enc;
}

ComplexOperator extract_block(const BlockEncoding& enc) {
  return extract_block(*enc.circuit, enc.layout, enc.ancillas);
}

ComplexOperator block_at(const TimeIndexedBlockEncoding& enc, std::uint64_t m) {
  return block_at_register(*enc.circuit, enc.layout, enc.system, enc.time, m);
}

double time_leakage(const TimeIndexedBlockEncoding& enc, std::uint64_t m) {
  return register_leakage(*enc.circuit, enc.layout, enc.system, enc.time, m);
}

TimeIndexedBlockEncoding ham_t_from_samples(const SampledHamiltonian& hs,
                                            const std::string& system,
                                            const std::string& ancilla,
                                            const std::string& time) {
  if (hs.samples.empty()) throw InvalidArgument("ham_t_from_samples: no samples");
  const int ns = qubits_for_dimension(hs.dimension(), "ham_t_from_samples");
  const std::uint64_t count = hs.samples.size();
  const int nd = ceil_log2(count);
  std::vector<ComplexOperator> blocks;
  blocks.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    const auto& h = hs.samples[m];
    if (h.rows() != hs.dimension() || h.cols() != hs.dimension()) {
      throw InvalidArgument("ham_t_from_samples: samples must share one shape");
    }
    require_within_alpha(h, hs.alpha, "ham_t_from_samples");
    blocks.push_back(completion_matrix(h / hs.alpha));
  }
  std::vector<int> select(std::size_t{1} << nd);
  for (std::size_t m = 0; m < select.size(); ++m) {
    select[m] = static_cast<int>(std::min<std::uint64_t>(m, count - 1));
  }
  TimeIndexedBlockEncoding enc;
  enc.layout.add(system, ns);
  enc.layout.add(ancilla, 1);
  enc.layout.add(time, nd);
  enc.circuit = std::make_shared<MultiplexedUnitary>(
      std::vector<std::string>{system, ancilla}, std::vector<std::string>{time},
      std::move(blocks), std::move(select));
  enc.alpha = hs.alpha;
  enc.system = system;
  enc.ancillas = {ancilla};
  enc.time = time;
  enc.M = std::uint64_t{1} << nd;
  enc.tau = hs.t;
  return enc;
}

InstrumentedOracle interaction_ham_t(const ComplexOperator& a, const BlockEncoding& enc_b,
                                     double tau, std::uint64_t M, const std::string& time) {
  require_hermitian(a, "interaction_ham_t: A");
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidArgument("interaction_ham_t: tau must be finite and >= 0");
  }
  if (!is_power_of_two(M)) throw InvalidArgument("interaction_ham_t: M must be a power of two");
  if (static_cast<std::uint64_t>(a.rows()) != enc_b.layout.at(enc_b.system).dimension()) {
    throw InvalidArgument("interaction_ham_t: A does not match the system register of B");
  }
  if (enc_b.layout.contains(time)) {
    throw InvalidArgument("interaction_ham_t: encoding of B already uses register '" + time + "'");
  }
  std::vector<ComplexOperator> forward, backward;
  std::vector<int> select(M);
  forward.reserve(M);
  backward.reserve(M);
  for (std::uint64_t m = 0; m < M; ++m) {
    const double theta = tau * static_cast<double>(m) / static_cast<double>(M);
    forward.push_back(matrix_exponential(a, theta));    // e^{-iA theta}
    backward.push_back(matrix_exponential(a, -theta));  // e^{+iA theta}
    select[m] = static_cast<int>(m);
  }
  auto counter = std::make_shared<QueryCounter>();
  auto ob = std::make_shared<Instrumented>(enc_b.circuit, counter);
  auto rot_in = std::make_shared<MultiplexedUnitary>(std::vector<std::string>{enc_b.system},
                                                     std::vector<std::string>{time},
                                                     std::move(forward), select);
  auto rot_out = std::make_shared<MultiplexedUnitary>(std::vector<std::string>{enc_b.system},
                                                      std::vector<std::string>{time},
                                                      std::move(backward), select);
  InstrumentedOracle out;
  out.counter = counter;
  auto& enc = out.encoding;
  enc.layout = enc_b.layout;
  enc.layout.add(time, ceil_log2(M));
  enc.circuit = sequence({rot_in, ob, rot_out});
  enc.alpha = enc_b.alpha;
  enc.system = enc_b.system;
  enc.ancillas = enc_b.ancillas;
  enc.time = time;
  enc.M = M;
  enc.tau = tau;
  return out;
}

InstrumentedOracle instrument(const TimeIndexedBlockEncoding& enc) {
  InstrumentedOracle out;
  out.counter = std::make_shared<QueryCounter>();
  out.encoding = enc;
  out.encoding.circuit = std::make_shared<Instrumented>(enc.circuit, out.counter);
  return out;
}

TimeIndexedBlockEncoding as_time_indexed(const BlockEncoding& enc, double tau,
                                         std::uint64_t M, const std::string& time) {
  if (!is_power_of_two(M)) throw InvalidArgument("as_time_indexed: M must be a power of two");
  if (enc.layout.contains(time)) {
    throw InvalidArgument("as_time_indexed: encoding already uses register '" + time + "'");
  }
  TimeIndexedBlockEncoding out;
  static_cast<BlockEncoding&>(out) = enc;
  out.layout.add(time, ceil_log2(M));
  out.time = time;
  out.M = M;
  out.tau = tau;
  return out;
}

}  // namespace dysonsim
