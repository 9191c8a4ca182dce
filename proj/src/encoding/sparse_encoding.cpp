// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/encoding/block_encoding.hpp"

namespace dysonsim {
namespace {

using SparseState = MultiplexedStatePreparation::SparseState;

Complex quantize(Complex v, int bits) {
  if (bits < 0) return v;
  const double scale = std::ldexp(1.0, bits);
  return {std::round(v.real() * scale) / scale, std::round(v.imag() * scale) / scale};
}

Complex oracle_value(const SparseHamiltonianSpec& spec, std::uint64_t m, std::uint64_t row,
                     std::uint64_t col, int bits) {
  const Complex h = quantize(spec.entry(m, row, col), bits);
  if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) {
    throw InvalidArgument("sparse_ham_t: non-finite oracle value");
  }
  if (std::abs(h) > spec.Hmax * (1.0 + tol::kHermitianInput)) {
    std::ostringstream os;
    os << "sparse_ham_t: |H(" << row << ", " << col << ")| = " << std::abs(h)
       << " exceeds Hmax = " << spec.Hmax << " at time index " << m;
    throw InvalidArgument(os.str());
  }
  return h;
}

}  // namespace

TimeIndexedBlockEncoding sparse_ham_t(const SparseHamiltonianSpec& spec,
                                      const SparseEncodingOptions& options) {
  validate_sparse(spec);
  if (!(spec.Hmax > 0.0)) throw InvalidArgument("sparse_ham_t: Hmax must be positive");
  if (spec.dim > 256) {
    throw BudgetExceeded("sparse_ham_t: dimension exceeds the encoding budget", spec.dim, 256);
  }
  const int ns = std::max(1, ceil_log2(spec.dim));
  const std::uint64_t ds = std::uint64_t{1} << ns;
  const int nd = ceil_log2(std::max(spec.time_points, options.min_time_points));
  const std::uint64_t col_flag = std::uint64_t{1} << ns;
  const std::uint64_t row_flag = std::uint64_t{2} << ns;
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(spec.d));

  // State index = k + ds * m; one extra state per register for padding
  // columns beyond dim, which fail deterministically.
  std::vector<SparseState> col_states, row_states;
  col_states.reserve(ds * spec.time_points + 1);
  row_states.reserve(ds * spec.time_points + 1);
  for (std::uint64_t m = 0; m < spec.time_points; ++m) {
    for (std::uint64_t k = 0; k < spec.dim; ++k) {
      SparseState col, row;
      std::vector<std::uint64_t> seen;
      for (int slot = 0; slot < spec.d; ++slot) {
        const std::uint64_t p = spec.position(m, k, slot);
        if (p >= spec.dim) {
          std::ostringstream os;
          os << "sparse_ham_t: position(" << m << ", " << k << ", " << slot
             << ") = " << p << " is out of range";
          throw InvalidArgument(os.str());
        }
        if (std::find(seen.begin(), seen.end(), p) != seen.end()) {
          std::ostringstream os;
          os << "sparse_ham_t: row " << k << " lists column " << p << " twice";
          throw InvalidArgument(os.str());
        }
        seen.push_back(p);
        // Column state: sqrt(H_pk / Hmax) on flag 0, the remainder on flag 1.
        const Complex hc = oracle_value(spec, m, p, k, options.precision_bits) / spec.Hmax;
        const double fc = std::sqrt(std::max(0.0, 1.0 - std::abs(hc)));
        col.emplace_back(p, std::sqrt(hc) * inv_sqrt_d);
        if (fc > 0.0) col.emplace_back(p | col_flag, fc * inv_sqrt_d);
        // Row state carries the conjugate root so that the overlap of the two
        // states reproduces H_jk rather than |H_jk|.
        const Complex hr = oracle_value(spec, m, k, p, options.precision_bits) / spec.Hmax;
        const double fr = std::sqrt(std::max(0.0, 1.0 - std::abs(hr)));
        row.emplace_back(p, std::conj(std::sqrt(hr)) * inv_sqrt_d);
        if (fr > 0.0) row.emplace_back(p | row_flag, fr * inv_sqrt_d);
      }
      // Renormalize away rounding drift of the sqrt split.
      for (auto* st : {&col, &row}) {
        double n2 = 0.0;
        for (const auto& e : *st) n2 += std::norm(e.second);
        for (auto& e : *st) e.second /= std::sqrt(n2);
      }
      col_states.push_back(std::move(col));
      row_states.push_back(std::move(row));
    }
  }
  const int pad = static_cast<int>(col_states.size());
  col_states.push_back({{col_flag, Complex(1.0, 0.0)}});
  row_states.push_back({{row_flag, Complex(1.0, 0.0)}});

  const std::uint64_t md = std::uint64_t{1} << nd;
  std::vector<int> select(ds * md);
  for (std::uint64_t m = 0; m < md; ++m) {
    const std::uint64_t mm = std::min(m, spec.time_points - 1);
    for (std::uint64_t k = 0; k < ds; ++k) {
      select[k + ds * m] = k < spec.dim ? static_cast<int>(k + spec.dim * mm) : pad;
    }
  }

  const std::string& s = options.system;
  const std::string& a = options.ancilla;
  auto u_col = std::make_shared<MultiplexedStatePreparation>(
      std::vector<std::string>{a}, std::vector<std::string>{s, options.time}, col_states,
      select);
  auto w_row = std::make_shared<MultiplexedStatePreparation>(
      std::vector<std::string>{a}, std::vector<std::string>{s, options.time}, row_states,
      select);
  // Exchange the system register with the column half of the ancilla.
  const std::uint64_t low = ds - 1;
  auto swap_map = [ns, low](std::uint64_t v) {
    const std::uint64_t sv = v & low;
    const std::uint64_t a1 = (v >> ns) & low;
    const std::uint64_t flag = v >> (2 * ns);
    return a1 | (sv << ns) | (flag << (2 * ns));
  };
  auto swap = std::make_shared<RegisterPermutation>(std::vector<std::string>{s, a}, swap_map,
                                                    swap_map);

  TimeIndexedBlockEncoding enc;
  enc.layout.add(s, ns);
  enc.layout.add(a, ns + 2);
  enc.layout.add(options.time, nd);
  // U_row^+ U_col with U_row = SWAP W_row.
  enc.circuit = sequence({u_col, swap, adjoint(w_row)});
  enc.alpha = spec.d * spec.Hmax;
  enc.system = s;
  enc.ancillas = {a};
  enc.time = options.time;
  enc.M = md;
  enc.tau = options.tau;
  return enc;
}

DiagonalEvolution diagonal_fast_forward(const SparseHamiltonianSpec& spec, double t,
                                        std::uint64_t m, const std::string& system) {
  validate_sparse(spec);
  if (!std::isfinite(t)) throw InvalidArgument("diagonal_fast_forward: t must be finite");
  if (m >= spec.time_points) throw InvalidArgument("diagonal_fast_forward: time index out of range");
  for (std::uint64_t row = 0; row < spec.dim; ++row) {
    for (int slot = 0; slot < spec.d; ++slot) {
      const std::uint64_t col = spec.position(m, row, slot);
      if (col != row && spec.entry(m, row, col) != Complex(0.0, 0.0)) {
        std::ostringstream os;
        os << "diagonal_fast_forward: nonzero off-diagonal entry (" << row << ", " << col << ")";
        throw InvalidArgument(os.str());
      }
    }
  }
  const int ns = std::max(1, ceil_log2(spec.dim));
  const std::uint64_t ds = std::uint64_t{1} << ns;
  ComplexOperator u = ComplexOperator::Identity(ds, ds);
  for (std::uint64_t j = 0; j < spec.dim; ++j) {
    const Complex a = spec.entry(m, j, j);
    if (std::abs(a.imag()) > tol::kHermitianInput * std::max(1.0, std::abs(a))) {
      throw InvalidArgument("diagonal_fast_forward: diagonal entries must be real");
    }
    u(j, j) = std::exp(Complex(0.0, -a.real() * t));
  }
  DiagonalEvolution out;
  out.circuit = MultiplexedUnitary::uniform({system}, u);
  out.unitary = u.topLeftCorner(spec.dim, spec.dim);
  // One query writes the diagonal value into a scratch register, one clears it.
  out.queries = 2;
  return out;
}

}  // namespace dysonsim
