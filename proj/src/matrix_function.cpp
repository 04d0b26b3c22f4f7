// Copyright 2026 The quasirep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quasirep/matrix_function.hpp"

#include <cmath>

#include "quasirep/error.hpp"

namespace quasirep {

MatrixFunction::MatrixFunction(GroupPtr g, std::vector<Matrix> m, std::optional<Matrix> projector)
    : group(std::move(g)), matrices(std::move(m)), support_projector(std::move(projector)) {
  if (!group) fail(ErrorCode::kInvalidArgument, "matrix function needs a group");
  if (matrices.size() != group->order()) fail(ErrorCode::kDimensionError, "need one matrix per element");
  const auto d = matrices.front().rows();
  for (const auto& a : matrices) {
    if (a.rows() != d || a.cols() != d) fail(ErrorCode::kDimensionError, "matrices must be square of one size");
    if (!a.allFinite()) fail(ErrorCode::kInvalidArgument, "matrix function has non-finite entries");
  }
  if (support_projector && (support_projector->rows() != d || support_projector->cols() != d))
    fail(ErrorCode::kDimensionError, "support projector has the wrong size");
}

std::size_t MatrixFunction::effective_dim() const {
  if (!support_projector) return dim();
  return static_cast<std::size_t>(std::llround(support_projector->trace().real()));
}

Matrix MatrixFunction::mean() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& a : matrices) acc += a;
  return acc / static_cast<double>(matrices.size());
}

Matrix MatrixFunction::gram() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& a : matrices) acc.noalias() += a.adjoint() * a;
  return acc / static_cast<double>(matrices.size());
}

Matrix MatrixFunction::co_gram() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& a : matrices) acc.noalias() += a * a.adjoint();
  return acc / static_cast<double>(matrices.size());
}

double MatrixFunction::mean_opnorm() const { return operator_norm(mean()); }

double MatrixFunction::mean_square_frobenius() const {
  double s = 0;
  for (const auto& a : matrices) s += a.squaredNorm();
  return s / static_cast<double>(matrices.size());
}

double MatrixFunction::admissibility_residual() const {
  const auto d = static_cast<Eigen::Index>(dim());
  const Matrix target = support_projector ? *support_projector : Matrix::Identity(d, d);
  return (gram() - target).norm();
}

bool MatrixFunction::is_admissible(const Tolerances& tol) const {
  return admissibility_residual() <= tol.admissibility;
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace quasirep
