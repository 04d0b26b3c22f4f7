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

#include "quasirep/approx_rep.hpp"

#include <algorithm>
#include <cmath>

#include "quasirep/error.hpp"

namespace quasirep {

double dim_ratio_sqrt(std::size_t d, std::size_t d_min) {
  if (d_min == 0) return 0.0;
  return std::sqrt(static_cast<double>(d) / static_cast<double>(d_min));
}

double thm1_bound(std::size_t d_psi, double mean_opnorm, std::size_t d_min) {
  const double m3 = mean_opnorm * mean_opnorm * mean_opnorm;
  const double raw = 2.0 * static_cast<double>(d_psi) * (1.0 - m3 - dim_ratio_sqrt(d_psi, d_min));
  return std::max(0.0, raw);
}

double cor1_bound(std::size_t d_psi, double mean_opnorm, std::size_t d_min) {
  const double m3 = mean_opnorm * mean_opnorm * mean_opnorm;
  return std::min(1.0, 0.5 * (1.0 + m3 + dim_ratio_sqrt(d_psi, d_min)));
}

double minor_defect(std::size_t d_psi, std::size_t d_rho) {
  const double r = static_cast<double>(d_psi) / static_cast<double>(d_rho);
  return 2.0 * static_cast<double>(d_psi) * (1.0 - std::sqrt(r));
}

double polar_normalized_bound(double ratio) {
  return 4.0 * (1.0 - std::sqrt(ratio)) + 6.0 * (1.0 - ratio);
}

double polar_defect_bound(std::size_t d_psi, std::size_t d_rho) {
  const double r = static_cast<double>(d_psi) / static_cast<double>(d_rho);
  return 2.0 * static_cast<double>(d_psi) * polar_normalized_bound(r);
}

double polar_threshold_ratio() { return (31.0 - 2.0 * std::sqrt(58.0)) / 18.0; }

double agreement_probability(const MatrixFunction& psi, const Tolerances& tol) {
  const FiniteGroup& g = *psi.group;
  const std::size_t n = g.order();
  const auto d = static_cast<Eigen::Index>(psi.dim());
  const double tol2 = tol.agreement * tol.agreement;
  Matrix prod(d, d);
  std::size_t hits = 0;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      prod.noalias() = psi(x) * psi(y);
      if ((psi(g.mul(x, y)) - prod).squaredNorm() <= tol2) ++hits;
    }
  return static_cast<double>(hits) / static_cast<double>(n * n);
}

namespace {

void fill_bounds(DefectReport& r, std::size_t d_min) {
  const std::size_t d = r.psi_dim;
  r.normalized_defect = d == 0 ? 0.0 : r.defect / (2.0 * static_cast<double>(d));
  r.thm1_bound = thm1_bound(d, r.mean_opnorm, d_min);
  r.cor1_bound = cor1_bound(d, r.mean_opnorm, d_min);
}

}  // namespace

DefectReport defect_direct(const MatrixFunction& psi, std::optional<std::size_t> d_min,
                           const Tolerances& tol) {
  if (!d_min) fail(ErrorCode::kMissingIrrepTable, "defect bounds need d_min of the group");
  const FiniteGroup& g = *psi.group;
  const std::size_t n = g.order();
  const auto d = static_cast<Eigen::Index>(psi.dim());
  const double tol2 = tol.agreement * tol.agreement;

  DefectReport r;
  r.psi_dim = psi.effective_dim();
  Matrix prod(d, d);
  double total = 0;
  Complex triple = 0;
  std::size_t hits = 0;
  for (Element x = 0; x < n; ++x) {
    double row = 0;
    Complex row_triple = 0;
    for (Element y = 0; y < n; ++y) {
      prod.noalias() = psi(x) * psi(y);
      const Matrix& target = psi(g.mul(x, y));
      const double dist2 = (target - prod).squaredNorm();
      row += dist2;
      row_triple += target.conjugate().cwiseProduct(prod).sum();
      if (dist2 <= tol2) ++hits;
    }
    total += row;
    triple += row_triple;
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n);
  r.defect = total / pairs;
  r.triple_trace = triple / pairs;
  r.agreement_prob = static_cast<double>(hits) / pairs;
  r.mean_opnorm = psi.mean_opnorm();
  r.admissibility_residual = psi.admissibility_residual();
  fill_bounds(r, *d_min);
  return r;
}

DefectReport defect_via_fourier(const MatrixFunction& psi, const IrrepTable& table,
                                const Tolerances& tol) {
  if (!table.is_complete()) fail(ErrorCode::kIncompleteTable, "Fourier route needs every irrep");
  const MatrixSpectrum spec = transform_matrix(psi, table);

  Complex triple = 0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Matrix& b = spec.blocks[r];
    triple += static_cast<double>(table[r].dim()) * (b * b.adjoint() * b).trace();
  }

  DefectReport r;
  r.psi_dim = psi.effective_dim();
  r.triple_trace = triple;
  const double product_term = (psi.gram() * psi.co_gram()).trace().real();
  r.defect = psi.mean_square_frobenius() + product_term - 2.0 * triple.real();
  // the trivial irrep is first in every table, so block 0 is E_x psi(x)
  r.mean_opnorm = operator_norm(spec.blocks.front());
  r.agreement_prob = agreement_probability(psi, tol);
  r.admissibility_residual = psi.admissibility_residual();
  fill_bounds(r, table.d_min());
  return r;
}

double opnorm_fourier_block(const MatrixFunction& psi, const UnitaryRep& rho) {
  const FiniteGroup& g = *psi.group;
  const auto dp = static_cast<Eigen::Index>(psi.dim());
  const auto dr = static_cast<Eigen::Index>(rho.dim());
  Matrix acc = Matrix::Zero(dp * dr, dp * dr);
  for (Element x = 0; x < g.order(); ++x) {
    const Matrix& a = psi(x);
    for (Eigen::Index i = 0; i < dp; ++i)
      for (Eigen::Index j = 0; j < dp; ++j) acc.block(i * dr, j * dr, dr, dr) += a(i, j) * rho(x);
  }
  acc /= static_cast<double>(g.order());
  return operator_norm(acc);
}

}  // namespace quasirep
