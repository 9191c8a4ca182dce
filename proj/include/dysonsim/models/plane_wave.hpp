// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "dysonsim/models/hubbard.hpp"

namespace dysonsim {

struct Nucleus {
  double charge = 0.0;
  std::array<double, 3> position{0.0, 0.0, 0.0};
};

/// Electronic structure in a periodic cell. N counts spin orbitals, so the
/// grid has N/2 points, side^dims of them. dims = 3 is the physical case;
/// dims = 1 or 2 are reduced analogues.
struct PlaneWaveSpec {
  int N = 0;
  double Omega = 1.0;
  int dims = 3;
  std::vector<Nucleus> nuclei;
};

/// Coefficients on the centered momentum/position grid. Entry i of each
/// table belongs to grid point grid[i].
struct PlaneWaveTables {
  int dims = 3;
  int side = 1;
  std::vector<std::array<int, 3>> grid;
  Eigen::VectorXd T_tilde;
  Eigen::VectorXd U;
  Eigen::VectorXd V;
  double alpha_T = 0.0;
};

/// Points per dimension; throws unless N/2 is a perfect dims-th power.
int plane_wave_side(const PlaneWaveSpec& spec);

/// Centered integer grid: each component runs over
/// [-floor(side/2), side - 1 - floor(side/2)], first component fastest.
std::vector<std::array<int, 3>> plane_wave_grid(int side, int dims);

/// k_nu = 2 pi nu / Omega^(1/dims).
std::array<double, 3> plane_wave_momentum(const std::array<int, 3>& nu, double omega,
                                          int dims);

/// T~(p) = |k_p|^2 / 2,
/// U(p) = -(4 pi / Omega) sum_{nu != 0, j} zeta_j cos(k_nu . (R_j - r_p)) / |k_nu|^2,
/// V(s) = (2 pi / Omega) sum_{nu != 0} cos(k_nu . r_s) / |k_nu|^2,
/// with r_p = p (Omega / (N/2))^(1/dims) and alpha_T = sum_{p,sigma} |T~(p)|.
PlaneWaveTables plane_wave_coefficients(const PlaneWaveSpec& spec);

/// Dual-basis Hubbard model of a one-dimensional odd grid (T(s) is real
/// only when the grid is symmetric about zero). The site potential is spin
/// independent.
HubbardSpec plane_wave_to_hubbard(const PlaneWaveSpec& spec);

}  // namespace dysonsim
