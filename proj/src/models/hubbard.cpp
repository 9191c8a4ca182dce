// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/models/hubbard.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/models/fermions.hpp"

namespace dysonsim {
namespace {

int wrap(int s, int N) { return ((s % N) + N) % N; }

int parity_below(std::uint64_t state, int mode) {
  const std::uint64_t below = state & ((std::uint64_t{1} << mode) - 1);
  return std::popcount(below) & 1;
}

void require_fock_budget(const HubbardSpec& spec) {
  if (spec.dims != 1) {
    throw InvalidArgument("Fock-space builds support one spatial dimension only");
  }
  const int modes = 2 * spec.N;
  if (modes > kMaxDenseModes) {
    throw BudgetExceeded("Hubbard model with " + std::to_string(spec.N) +
                             " sites needs " + std::to_string(modes) + " modes",
                         modes, kMaxDenseModes);
  }
}

// Diagonal of sum over ordered pairs (x,s) != (y,s') of V(x-y) n n.
Eigen::VectorXd interaction_diagonal(const HubbardSpec& spec) {
  const int modes = 2 * spec.N;
  const Eigen::Index dim = Eigen::Index{1} << modes;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index state = 0; state < dim; ++state) {
    double e = 0.0;
    for (int x = 0; x < spec.N; ++x) {
      for (int sx = 0; sx < 2; ++sx) {
        if (!((state >> hubbard_mode(spec.N, x, sx)) & 1)) continue;
        for (int y = 0; y < spec.N; ++y) {
          for (int sy = 0; sy < 2; ++sy) {
            if (x == y && sx == sy) continue;
            if (!((state >> hubbard_mode(spec.N, y, sy)) & 1)) continue;
            e += spec.V[wrap(x - y, spec.N)];
          }
        }
      }
    }
    diag[state] = e;
  }
  return diag;
}

}  // namespace

int hubbard_mode(int N, int x, int spin) {
  if (x < 0 || x >= N || spin < 0 || spin > 1) {
    throw InvalidArgument("hubbard_mode: site or spin out of range");
  }
  return N * spin + x;
}

void validate_hubbard(const HubbardSpec& spec) {
  if (spec.N < 1) throw InvalidArgument("Hubbard model needs at least one site");
  if (spec.dims < 1) throw InvalidArgument("Hubbard model needs dims >= 1");
  const auto n = static_cast<std::size_t>(spec.N);
  if (spec.T.size() != n || spec.U.size() != n || spec.V.size() != n) {
    throw InvalidArgument("Hubbard coefficient arrays must have one entry per site");
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!std::isfinite(spec.T[s]) || !std::isfinite(spec.V[s]) ||
        !std::isfinite(spec.U[s][0]) || !std::isfinite(spec.U[s][1])) {
      throw InvalidArgument("Hubbard coefficients must be finite");
    }
  }
  for (int s = 0; s < spec.N; ++s) {
    const int r = wrap(-s, spec.N);
    if (spec.V[s] != spec.V[r]) {
      throw InvalidArgument("Hubbard V must be symmetric: V(" + std::to_string(s) +
                            ") != V(" + std::to_string(r) + ")");
    }
    if (spec.T[s] != spec.T[r]) {
      throw InvalidArgument("Hubbard T must satisfy T(s) = T(-s) for a Hermitian model: T(" +
                            std::to_string(s) + ") != T(" + std::to_string(r) + ")");
    }
  }
}

ComplexOperator hopping_operator(int n_modes, int i, int j) {
  if (n_modes < 1 || n_modes > kMaxDenseModes) {
    throw BudgetExceeded("hopping operator outside dense budget", n_modes, kMaxDenseModes);
  }
  if (i < 0 || j < 0 || i >= n_modes || j >= n_modes) {
    throw InvalidArgument("hopping_operator: mode out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  ComplexOperator out = ComplexOperator::Zero(dim, dim);
  for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(dim); ++n) {
    if (!((n >> j) & 1)) continue;
    const std::uint64_t m = n & ~(std::uint64_t{1} << j);
    int sign = parity_below(n, j);
    if ((m >> i) & 1) continue;
    sign ^= parity_below(m, i);
    const std::uint64_t r = m | (std::uint64_t{1} << i);
    out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n)) = sign ? -1.0 : 1.0;
  }
  return out;
}

HubbardParts build_hubbard(const HubbardSpec& spec) {
  validate_hubbard(spec);
  require_fock_budget(spec);
  const int modes = 2 * spec.N;
  const Eigen::Index dim = Eigen::Index{1} << modes;
  HubbardParts out;
  out.n_modes = modes;
  out.kinetic = ComplexOperator::Zero(dim, dim);
  for (int spin = 0; spin < 2; ++spin) {
    for (int x = 0; x < spec.N; ++x) {
      for (int y = 0; y < spec.N; ++y) {
        const double t = spec.T[wrap(x - y, spec.N)];
        if (t == 0.0) continue;
        out.kinetic += t * hopping_operator(modes, hubbard_mode(spec.N, x, spin),
                                            hubbard_mode(spec.N, y, spin));
      }
    }
  }
  Eigen::VectorXd onsite = Eigen::VectorXd::Zero(dim);
  for (int x = 0; x < spec.N; ++x) {
    for (int spin = 0; spin < 2; ++spin) {
      onsite += spec.U[x][spin] * occupation(modes, hubbard_mode(spec.N, x, spin));
    }
  }
  out.onsite = onsite.cast<Complex>().asDiagonal();
  out.interaction = interaction_diagonal(spec).cast<Complex>().asDiagonal();
  out.total = out.kinetic + out.onsite + out.interaction;
  return out;
}

ComplexOperator kinetic_matrix(const HubbardSpec& spec) {
  validate_hubbard(spec);
  ComplexOperator t(spec.N, spec.N);
  for (int x = 0; x < spec.N; ++x) {
    for (int y = 0; y < spec.N; ++y) t(x, y) = spec.T[wrap(x - y, spec.N)];
  }
  return t;
}

Eigen::VectorXcd kinetic_dispersion(const HubbardSpec& spec) {
  validate_hubbard(spec);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(spec.N);
  for (int p = 0; p < spec.N; ++p) {
    for (int s = 0; s < spec.N; ++s) {
      out[p] += spec.T[s] * std::exp(kI * (2.0 * std::numbers::pi * p * s / spec.N));
    }
  }
  return out;
}

Eigen::VectorXcd potential_fourier(const HubbardSpec& spec) {
  validate_hubbard(spec);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(spec.N);
  for (int k = 0; k < spec.N; ++k) {
    for (int x = 0; x < spec.N; ++x) {
      out[k] += spec.V[x] * std::exp(kI * (2.0 * std::numbers::pi * x * k / spec.N));
    }
  }
  return out;
}

ComplexOperator dft_matrix(int N) {
  if (N < 1) throw InvalidArgument("dft_matrix: N must be >= 1");
  ComplexOperator f(N, N);
  const double norm = 1.0 / std::sqrt(static_cast<double>(N));
  for (int x = 0; x < N; ++x) {
    for (int p = 0; p < N; ++p) {
      f(x, p) = norm * std::exp(-kI * (2.0 * std::numbers::pi * p * x / N));
    }
  }
  return f;
}

double fourier_potential_identity_check(const HubbardSpec& spec) {
  validate_hubbard(spec);
  require_fock_budget(spec);
  const int modes = 2 * spec.N;
  const Eigen::Index dim = Eigen::Index{1} << modes;
  const Eigen::VectorXd lhs = interaction_diagonal(spec);

  // Site densities sum_sigma n_{x sigma}.
  std::vector<Eigen::VectorXd> density(spec.N, Eigen::VectorXd::Zero(dim));
  Eigen::VectorXd total = Eigen::VectorXd::Zero(dim);
  for (int x = 0; x < spec.N; ++x) {
    for (int spin = 0; spin < 2; ++spin) {
      density[x] += occupation(modes, hubbard_mode(spec.N, x, spin));
    }
    total += density[x];
  }
  const Eigen::VectorXcd vk = potential_fourier(spec);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(spec.N));
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
  for (int k = 0; k < spec.N; ++k) {
    Eigen::VectorXcd chi = Eigen::VectorXcd::Zero(dim);
    for (int x = 0; x < spec.N; ++x) {
      chi += inv_sqrt_n * std::exp(-kI * (2.0 * std::numbers::pi * x * k / spec.N)) *
             density[x].cast<Complex>();
    }
    // chi_k chi_k^dag is diagonal with entries |chi_k|^2.
    rhs += vk[k] * chi.cwiseAbs2().cast<Complex>();
  }
  const Complex v0 = vk.sum() / static_cast<double>(spec.N);
  rhs -= v0 * total.cast<Complex>();
  return (lhs.cast<Complex>() - rhs).cwiseAbs().maxCoeff();
}

}  // namespace dysonsim
