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

#ifndef QUASIREP_FOURIER_HPP
#define QUASIREP_FOURIER_HPP

#include <vector>

#include "quasirep/config.hpp"
#include "quasirep/matrix_function.hpp"
#include "quasirep/repr.hpp"

namespace quasirep {

// Conventions: f^(rho) = E_x f(x) rho(x)^dag and
// f(x) = sum_rho d_rho tr(f^(rho) rho(x)); the forward transform carries the
// 1/|G|.

struct ScalarFunction {
  GroupPtr group;
  std::vector<Complex> values;
};

/// One d_rho x d_rho block per irrep, aligned with the table it came from.
struct ScalarSpectrum {
  std::vector<Matrix> blocks;
};

/// For each irrep rho the operator E_x psi(x) (x) rho(x) on C^{d_psi} (x) C^{d_rho}
/// (the Fourier coefficient at rho^dag, partially transposed). Blocks are
/// aligned with the table.
struct MatrixSpectrum {
  std::size_t psi_dim = 0;
  std::vector<Matrix> blocks;
};

ScalarSpectrum transform_scalar(const ScalarFunction& f, const IrrepTable& table);

/// kIncompleteTable unless sum d^2 = |G|.
ScalarFunction invert_scalar(const ScalarSpectrum& s, const IrrepTable& table);

struct PlancherelSides {
  double lhs = 0;  // sum_x |f(x)|^2
  double rhs = 0;  // |G| sum_rho d_rho ||f^(rho)||_F^2
};

PlancherelSides plancherel_check(const ScalarFunction& f, const ScalarSpectrum& s,
                                 const IrrepTable& table);

/// sum_x conj(f(x)) g(x)
Complex inner_product(const ScalarFunction& f, const ScalarFunction& g);
/// |G| sum_rho d_rho tr(F(rho)^dag G(rho))
Complex spectral_inner_product(const ScalarSpectrum& f, const ScalarSpectrum& g,
                               const IrrepTable& table);

MatrixSpectrum transform_matrix(const MatrixFunction& psi, const IrrepTable& table);

/// sum_rho d_rho ||block(rho)||_F^2, the spectral side of E_x ||psi(x)||_F^2.
double matrix_plancherel_rhs(const MatrixSpectrum& s, const IrrepTable& table);

/// The rank-one operator delta^{ik} delta_{jl} / d on C^d (x) C^d.
Matrix cupcap(std::size_t d);

}  // namespace quasirep

#endif  // QUASIREP_FOURIER_HPP
