// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dysonsim/models/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {

void validate_sparse(const SparseHamiltonianSpec& spec) {
  if (spec.dim == 0) throw InvalidArgument("sparse model dimension must be >= 1");
  if (spec.d < 1) throw InvalidArgument("sparse model needs d >= 1");
  if (static_cast<std::uint64_t>(spec.d) > spec.dim) {
    throw InvalidArgument("sparse model has d larger than its dimension");
  }
  if (spec.time_points == 0) throw InvalidArgument("sparse model needs time_points >= 1");
  if (!spec.entry || !spec.position) {
    throw InvalidArgument("sparse model needs entry and position callbacks");
  }
  if (!(spec.Hmax >= 0.0) || !std::isfinite(spec.Hmax)) {
    throw InvalidArgument("sparse model Hmax must be finite and >= 0");
  }
}

ComplexOperator sparse_matrix_materialize(const SparseHamiltonianSpec& spec,
                                          std::uint64_t m) {
  validate_sparse(spec);
  if (spec.dim > kMaxSparseDim) {
    throw BudgetExceeded("sparse model dimension exceeds the dense budget",
                         ceil_log2(spec.dim), ceil_log2(kMaxSparseDim));
  }
  if (m >= spec.time_points) throw InvalidArgument("sparse time index out of range");
  const auto n = static_cast<Eigen::Index>(spec.dim);
  ComplexOperator h = ComplexOperator::Zero(n, n);
  std::vector<std::uint64_t> cols(spec.d);
  for (std::uint64_t row = 0; row < spec.dim; ++row) {
    for (int j = 0; j < spec.d; ++j) {
      const std::uint64_t col = spec.position(m, row, j);
      if (col >= spec.dim) {
        std::ostringstream os;
        os << "sparse position out of range at (row " << row << ", slot " << j
           << ") -> col " << col;
        throw InvalidArgument(os.str());
      }
      if (std::find(cols.begin(), cols.begin() + j, col) != cols.begin() + j) {
        std::ostringstream os;
        os << "sparsity violation: repeated column at (" << row << ", " << col << ")";
        throw InvalidArgument(os.str());
      }
      cols[j] = col;
      const Complex v = spec.entry(m, row, col);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os << "sparse entry not finite at (" << row << ", " << col << ")";
        throw InvalidArgument(os.str());
      }
      h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
  }
  const double scale = std::max(1.0, max_abs(h));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(h(i, j) - std::conj(h(j, i))) > tol::kHermitianInput * scale) {
        std::ostringstream os;
        os << "sparse model not Hermitian at (" << i << ", " << j << ")";
        throw InvalidArgument(os.str());
      }
    }
  }
  return h;
}

SparseHamiltonianSpec sparse_from_matrices(std::vector<ComplexOperator> matrices, int d,
                                           double Hmax) {
  if (matrices.empty()) throw InvalidArgument("sparse_from_matrices: no matrices");
  const Eigen::Index n = matrices.front().rows();
  if (d < 1 || d > n) throw InvalidArgument("sparse_from_matrices: d out of range");
  double hmax = 0.0;
  auto slots = std::make_shared<std::vector<std::vector<std::uint64_t>>>();
  for (const auto& h : matrices) {
    if (h.rows() != n || h.cols() != n) {
      throw InvalidArgument("sparse_from_matrices: matrices must share one square shape");
    }
    hmax = std::max(hmax, max_abs(h));
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n) * d);
    for (Eigen::Index row = 0; row < n; ++row) {
      std::vector<std::uint64_t> cols;
      for (Eigen::Index col = 0; col < n; ++col) {
        if (h(row, col) != Complex(0.0)) cols.push_back(col);
      }
      if (static_cast<int>(cols.size()) > d) {
        std::ostringstream os;
        os << "sparse_from_matrices: row " << row << " has " << cols.size()
           << " nonzeros, more than d = " << d;
        throw InvalidArgument(os.str());
      }
      for (Eigen::Index col = 0; static_cast<int>(cols.size()) < d; ++col) {
        if (std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(col);
      }
      std::sort(cols.begin(), cols.end());
      std::copy(cols.begin(), cols.end(), table.begin() + row * d);
    }
    slots->push_back(std::move(table));
  }
  auto data = std::make_shared<std::vector<ComplexOperator>>(std::move(matrices));
  SparseHamiltonianSpec spec;
  spec.dim = static_cast<std::uint64_t>(n);
  spec.d = d;
  spec.time_points = data->size();
  spec.Hmax = Hmax >= 0.0 ? Hmax : hmax;
  spec.entry = [data](std::uint64_t m, std::uint64_t row, std::uint64_t col) {
    return (*data)[m](static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  };
  spec.position = [slots, d](std::uint64_t m, std::uint64_t row, int j) {
    return (*slots)[m][row * d + j];
  };
  return spec;
}

int row_sparsity(const ComplexOperator& h) {
  int best = 0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    int count = 0;
    for (Eigen::Index j = 0; j < h.cols(); ++j) count += h(i, j) != Complex(0.0);
    best = std::max(best, count);
  }
  return best;
}

}  // namespace dysonsim
