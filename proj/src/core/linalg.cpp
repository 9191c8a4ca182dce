// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/core/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {

double max_abs(const ComplexOperator& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexOperator& a) {
  return max_abs(a - a.adjoint());
}

double unitarity_defect(const ComplexOperator& u) {
  const auto n = u.rows();
  return max_abs(u.adjoint() * u - ComplexOperator::Identity(n, n));
}

bool all_finite(const ComplexOperator& a) { return a.allFinite(); }

void require_hermitian(const ComplexOperator& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows()
       << "x" << a.cols();
    throw InvalidArgument(os.str());
  }
  if (!all_finite(a)) {
    throw InvalidArgument(std::string(what) + ": entries must be finite");
  }
  const double defect = hermiticity_defect(a);
  const double scale = std::max(1.0, max_abs(a));
  if (defect > tol::kHermitianInput * scale) {
    std::ostringstream os;
    os << what << ": not Hermitian, ||H - H^dag||_max = " << defect;
    throw InvalidArgument(os.str());
  }
}

ComplexOperator matrix_exponential(const ComplexOperator& h, double theta) {
  require_hermitian(h, "matrix_exponential");
  const ComplexOperator sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(sym);
  const Eigen::VectorXd& w = eig.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -theta * w[i]));
  }
  const ComplexOperator& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

ComplexOperator hermitian_psd_sqrt(const ComplexOperator& p) {
  require_hermitian(p, "hermitian_psd_sqrt");
  const ComplexOperator sym = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(sym);
  Eigen::VectorXd w = eig.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] < -tol::kPsdReject) {
      std::ostringstream os;
      os << "hermitian_psd_sqrt: input not PSD, eigenvalue " << w[i];
      throw InvalidArgument(os.str());
    }
    w[i] = std::sqrt(std::max(w[i], 0.0));
  }
  const ComplexOperator& v = eig.eigenvectors();
  return v * w.cast<Complex>().asDiagonal() * v.adjoint();
}

ComplexOperator unitary_with_first_column(const StateVector& v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw InvalidArgument("unitary_with_first_column: empty vector");
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("unitary_with_first_column: vector must be normalized");
  }
  const double a0 = std::abs(v[0]);
  const Complex phase = a0 > 0.0 ? v[0] / a0 : Complex(1.0, 0.0);
  StateVector w = std::conj(phase) * v;
  StateVector u = -w;
  u[0] += 1.0;
  const double uu = u.squaredNorm();
  ComplexOperator q = ComplexOperator::Identity(n, n);
  if (uu > 0.0) q -= (2.0 / uu) * u * u.adjoint();
  return phase * q;
}

double spectral_norm(const ComplexOperator& a) {
  if (!all_finite(a)) {
    throw InvalidArgument("spectral_norm: entries must be finite");
  }
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexOperator> svd(a);
  return svd.singularValues()[0];
}

ComplexOperator kron(const ComplexOperator& a, const ComplexOperator& b) {
  ComplexOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexOperator kron_all(std::span<const ComplexOperator> factors) {
  ComplexOperator out = ComplexOperator::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

namespace pauli {

ComplexOperator identity(std::int64_t dim) {
  return ComplexOperator::Identity(dim, dim);
}

ComplexOperator x() {
  ComplexOperator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexOperator y() {
  ComplexOperator m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

ComplexOperator z() {
  ComplexOperator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexOperator from_string(std::string_view word) {
  ComplexOperator out = ComplexOperator::Identity(1, 1);
  for (char c : word) {
    switch (c) {
      case 'I': out = kron(out, identity()); break;
      case 'X': out = kron(out, x()); break;
      case 'Y': out = kron(out, y()); break;
      case 'Z': out = kron(out, z()); break;
      default:
        throw InvalidArgument("pauli::from_string: unknown letter '" +
                              std::string(1, c) + "'");
    }
  }
  return out;
}

}  // namespace pauli

std::uint64_t next_power_of_two(std::uint64_t n) {
  return n <= 1 ? 1 : std::bit_ceil(n);
}

int ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

}  // namespace dysonsim
