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

#ifndef QUASIREP_MATRIX_FUNCTION_HPP
#define QUASIREP_MATRIX_FUNCTION_HPP

#include <optional>
#include <vector>

#include "quasirep/config.hpp"
#include "quasirep/group.hpp"

namespace quasirep {

/// An arbitrary map G -> d x d complex matrices: a candidate approximate
/// representation.
///
/// `support_projector`, when set, is the projector P that E_x psi^dag psi
/// should equal (a minor written in the ambient space); otherwise P = 1.
struct MatrixFunction {
  GroupPtr group;
  std::vector<Matrix> matrices;
  std::optional<Matrix> support_projector;

  MatrixFunction() = default;
  MatrixFunction(GroupPtr g, std::vector<Matrix> m, std::optional<Matrix> projector = std::nullopt);

  std::size_t dim() const { return matrices.empty() ? 0 : static_cast<std::size_t>(matrices.front().rows()); }
  /// d_psi used by the defect formulas: dim(), or rank of the support projector.
  std::size_t effective_dim() const;
  const Matrix& operator()(Element x) const { return matrices[x]; }

  Matrix mean() const;            // E_x psi(x)
  Matrix gram() const;            // E_x psi(x)^dag psi(x)
  Matrix co_gram() const;         // E_x psi(x) psi(x)^dag
  double mean_opnorm() const;     // ||E_x psi(x)||_op
  double mean_square_frobenius() const;  // E_x ||psi(x)||_F^2
  /// ||E_x psi^dag psi - P||_F
  double admissibility_residual() const;
  bool is_admissible(const Tolerances& tol = default_tolerances()) const;
};

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Kronecker product a (x) b, row index i * rows(b) + k.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace quasirep

#endif  // QUASIREP_MATRIX_FUNCTION_HPP
