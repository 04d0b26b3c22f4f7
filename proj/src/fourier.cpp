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

#include "quasirep/fourier.hpp"

#include "quasirep/error.hpp"

namespace quasirep {

namespace {

void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.hash() != b.hash())
    fail(ErrorCode::kInvalidArgument, "function and irrep table live on different groups");
}

void require_complete(const IrrepTable& table) {
  if (!table.is_complete()) fail(ErrorCode::kIncompleteTable, "irrep table is not complete");
}

}  // namespace

ScalarSpectrum transform_scalar(const ScalarFunction& f, const IrrepTable& table) {
  require_same_group(*f.group, table.group());
  const double n = static_cast<double>(f.values.size());
  ScalarSpectrum s;
  for (const auto& rho : table.irreps()) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Matrix acc = Matrix::Zero(d, d);
    for (Element x = 0; x < f.values.size(); ++x) acc += f.values[x] * rho(x).adjoint();
    s.blocks.push_back(acc / n);
  }
  return s;
}

ScalarFunction invert_scalar(const ScalarSpectrum& s, const IrrepTable& table) {
  require_complete(table);
  if (s.blocks.size() != table.size()) fail(ErrorCode::kIncompleteTable, "spectrum is not aligned with the table");
  ScalarFunction f{table.group_ptr(), std::vector<Complex>(table.group().order(), 0.0)};
  for (std::size_t r = 0; r < table.size(); ++r) {
    const double d = static_cast<double>(table[r].dim());
    const Matrix& block = s.blocks[r];
    for (Element x = 0; x < f.values.size(); ++x)
      f.values[x] += d * (block.transpose().cwiseProduct(table[r](x))).sum();
  }
  return f;
}

PlancherelSides plancherel_check(const ScalarFunction& f, const ScalarSpectrum& s,
                                 const IrrepTable& table) {
  PlancherelSides p;
  for (const auto& v : f.values) p.lhs += std::norm(v);
  for (std::size_t r = 0; r < table.size(); ++r)
    p.rhs += static_cast<double>(table[r].dim()) * s.blocks[r].squaredNorm();
  p.rhs *= static_cast<double>(table.group().order());
  return p;
}

Complex inner_product(const ScalarFunction& f, const ScalarFunction& g) {
  Complex s = 0;
  for (std::size_t x = 0; x < f.values.size(); ++x) s += std::conj(f.values[x]) * g.values[x];
  return s;
}

Complex spectral_inner_product(const ScalarSpectrum& f, const ScalarSpectrum& g,
                               const IrrepTable& table) {
  Complex s = 0;
  for (std::size_t r = 0; r < table.size(); ++r)
    s += static_cast<double>(table[r].dim()) * (f.blocks[r].adjoint() * g.blocks[r]).trace();
  return s * static_cast<double>(table.group().order());
}

MatrixSpectrum transform_matrix(const MatrixFunction& psi, const IrrepTable& table) {
  require_same_group(*psi.group, table.group());
  const double n = static_cast<double>(psi.matrices.size());
  MatrixSpectrum s;
  s.psi_dim = psi.dim();
  const auto dp = static_cast<Eigen::Index>(psi.dim());
  for (const auto& rho : table.irreps()) {
    const auto dr = static_cast<Eigen::Index>(rho.dim());
    Matrix acc = Matrix::Zero(dp * dr, dp * dr);
    for (Element x = 0; x < psi.matrices.size(); ++x) {
      const Matrix& a = psi(x);
      const Matrix& b = rho(x);
      for (Eigen::Index i = 0; i < dp; ++i)
        for (Eigen::Index j = 0; j < dp; ++j) acc.block(i * dr, j * dr, dr, dr) += a(i, j) * b;
    }
    s.blocks.push_back(acc / n);
  }
  return s;
}

double matrix_plancherel_rhs(const MatrixSpectrum& s, const IrrepTable& table) {
  double sum = 0;
  for (std::size_t r = 0; r < table.size(); ++r)
    sum += static_cast<double>(table[r].dim()) * s.blocks[r].squaredNorm();
  return sum;
}

Matrix cupcap(std::size_t d) {
  const auto di = static_cast<Eigen::Index>(d);
  Matrix c = Matrix::Zero(di * di, di * di);
  for (Eigen::Index i = 0; i < di; ++i)
    for (Eigen::Index j = 0; j < di; ++j) c(i * di + i, j * di + j) = 1.0 / static_cast<double>(d);
  return c;
}

}  // namespace quasirep
