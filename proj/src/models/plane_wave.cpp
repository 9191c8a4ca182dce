// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/models/plane_wave.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dysonsim/core/error.hpp"

namespace dysonsim {
namespace {

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b, int dims) {
  double s = 0.0;
  for (int i = 0; i < dims; ++i) s += a[i] * b[i];
  return s;
}

void validate(const PlaneWaveSpec& spec) {
  if (!(spec.Omega > 0.0) || !std::isfinite(spec.Omega)) {
    throw InvalidArgument("plane-wave cell volume Omega must be positive");
  }
  if (spec.dims < 1 || spec.dims > 3) {
    throw InvalidArgument("plane-wave dims must be 1, 2 or 3");
  }
  for (const auto& n : spec.nuclei) {
    if (!std::isfinite(n.charge)) throw InvalidArgument("nuclear charges must be finite");
    for (double c : n.position) {
      if (!std::isfinite(c)) throw InvalidArgument("nuclear positions must be finite");
    }
  }
}

}  // namespace

int plane_wave_side(const PlaneWaveSpec& spec) {
  validate(spec);
  if (spec.N < 2 || spec.N % 2 != 0) {
    throw InvalidArgument("plane-wave N counts spin orbitals and must be even and >= 2");
  }
  const int sites = spec.N / 2;
  const int side = static_cast<int>(std::lround(std::pow(sites, 1.0 / spec.dims)));
  int check = 1;
  for (int i = 0; i < spec.dims; ++i) check *= side;
  if (check != sites) {
    throw InvalidArgument("plane-wave N/2 = " + std::to_string(sites) +
                          " is not a perfect power for dims = " + std::to_string(spec.dims));
  }
  return side;
}

std::vector<std::array<int, 3>> plane_wave_grid(int side, int dims) {
  const int lo = -(side / 2);
  int count = 1;
  for (int i = 0; i < dims; ++i) count *= side;
  std::vector<std::array<int, 3>> grid;
  grid.reserve(count);
  for (int idx = 0; idx < count; ++idx) {
    std::array<int, 3> p{0, 0, 0};
    int rem = idx;
    for (int d = 0; d < dims; ++d) {
      p[d] = lo + rem % side;
      rem /= side;
    }
    grid.push_back(p);
  }
  return grid;
}

std::array<double, 3> plane_wave_momentum(const std::array<int, 3>& nu, double omega,
                                          int dims) {
  const double scale = 2.0 * std::numbers::pi / std::pow(omega, 1.0 / dims);
  std::array<double, 3> k{0.0, 0.0, 0.0};
  for (int d = 0; d < dims; ++d) k[d] = scale * nu[d];
  return k;
}

PlaneWaveTables plane_wave_coefficients(const PlaneWaveSpec& spec) {
  const int side = plane_wave_side(spec);
  const int dims = spec.dims;
  const int sites = spec.N / 2;
  const double spacing = std::pow(spec.Omega / sites, 1.0 / dims);

  PlaneWaveTables out;
  out.dims = dims;
  out.side = side;
  out.grid = plane_wave_grid(side, dims);
  const auto n = static_cast<Eigen::Index>(out.grid.size());
  out.T_tilde.resize(n);
  out.U.resize(n);
  out.V.resize(n);

  std::vector<std::array<double, 3>> k(n), r(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k[i] = plane_wave_momentum(out.grid[i], spec.Omega, dims);
    for (int d = 0; d < dims; ++d) r[i][d] = spacing * out.grid[i][d];
    for (int d = dims; d < 3; ++d) r[i][d] = 0.0;
  }
  for (Eigen::Index p = 0; p < n; ++p) {
    out.T_tilde[p] = 0.5 * dot(k[p], k[p], dims);
    double u = 0.0;
    double v = 0.0;
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      const double k2 = dot(k[nu], k[nu], dims);
      if (k2 == 0.0) continue;
      for (const auto& nuc : spec.nuclei) {
        std::array<double, 3> diff{0.0, 0.0, 0.0};
        for (int d = 0; d < dims; ++d) diff[d] = nuc.position[d] - r[p][d];
        u += nuc.charge * std::cos(dot(k[nu], diff, dims)) / k2;
      }
      v += std::cos(dot(k[nu], r[p], dims)) / k2;
    }
    out.U[p] = -4.0 * std::numbers::pi / spec.Omega * u;
    out.V[p] = 2.0 * std::numbers::pi / spec.Omega * v;
  }
  out.alpha_T = 2.0 * out.T_tilde.cwiseAbs().sum();
  return out;
}

HubbardSpec plane_wave_to_hubbard(const PlaneWaveSpec& spec) {
  if (spec.dims != 1) {
    throw InvalidArgument("plane-wave to lattice mapping supports dims = 1 only");
  }
  const int side = plane_wave_side(spec);
  if (side % 2 == 0) {
    throw InvalidArgument("plane-wave to lattice mapping needs an odd grid so T is real");
  }
  const PlaneWaveTables tables = plane_wave_coefficients(spec);
  const double spacing = spec.Omega / side;
  HubbardSpec h;
  h.N = side;
  h.dims = 1;
  h.T.assign(side, 0.0);
  h.U.assign(side, {0.0, 0.0});
  h.V.assign(side, 0.0);
  for (int s = 0; s < side; ++s) {
    double t = 0.0;
    for (int i = 0; i < side; ++i) {
      const int p = tables.grid[i][0];
      t += tables.T_tilde[i] * std::cos(2.0 * std::numbers::pi * p * s / side);
    }
    h.T[s] = t / side;
    // Grid index s is the lattice site; its coordinate is grid[s][0].
    h.U[s] = {tables.U[s], tables.U[s]};
    double v = 0.0;
    for (int i = 0; i < side; ++i) {
      const double k = 2.0 * std::numbers::pi * tables.grid[i][0] / spec.Omega;
      if (k == 0.0) continue;
      v += std::cos(k * spacing * s) / (k * k);
    }
    h.V[s] = 2.0 * std::numbers::pi / spec.Omega * v;
  }
  // Round-off can break the exact symmetry checks; symmetrize explicitly.
  for (int s = 1; s < side; ++s) {
    const int r = side - s;
    if (s < r) {
      const double t = 0.5 * (h.T[s] + h.T[r]);
      const double v = 0.5 * (h.V[s] + h.V[r]);
      h.T[s] = h.T[r] = t;
      h.V[s] = h.V[r] = v;
    }
  }
  return h;
}

}  // namespace dysonsim
