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

#ifndef QUASIREP_APPROX_REP_HPP
#define QUASIREP_APPROX_REP_HPP

#include <cstdint>
#include <optional>
#include <variant>

#include "quasirep/config.hpp"
#include "quasirep/fourier.hpp"
#include "quasirep/matrix_function.hpp"
#include "quasirep/repr.hpp"

namespace quasirep {

struct DefectReport {
  std::size_t psi_dim = 0;
  double defect = 0;             // E_{x,y} ||psi(xy) - psi(x)psi(y)||_F^2
  double normalized_defect = 0;  // defect / (2 d_psi)
  Complex triple_trace = 0;      // E_{x,y} tr psi(xy)^dag psi(x) psi(y)
  double agreement_prob = 0;     // Pr[||psi(xy) - psi(x)psi(y)||_F <= tol.agreement]
  double mean_opnorm = 0;        // ||E_x psi(x)||_op
  double thm1_bound = 0;         // 2 d (1 - m^3 - sqrt(d/d_min)), clamped at 0
  double cor1_bound = 0;         // min(1, (1 + m^3 + sqrt(d/d_min)) / 2)
  double admissibility_residual = 0;
};

/// sqrt(d / d_min); 0 when d_min = 0 (no nontrivial irreps).
double dim_ratio_sqrt(std::size_t d, std::size_t d_min);

/// Lower bound on the defect from the operator norm of the mean and d/d_min.
double thm1_bound(std::size_t d_psi, double mean_opnorm, std::size_t d_min);
/// Ceiling on the agreement probability.
double cor1_bound(std::size_t d_psi, double mean_opnorm, std::size_t d_min);
/// Exact defect of a minor: 2 d_psi (1 - sqrt(d_psi / d_rho)).
double minor_defect(std::size_t d_psi, std::size_t d_rho);
/// Upper bound for polar minors: 2 d_psi (4(1 - sqrt r) + 6(1 - r)), r = d_psi/d_rho.
double polar_defect_bound(std::size_t d_psi, std::size_t d_rho);
/// 4(1 - sqrt r) + 6(1 - r)
double polar_normalized_bound(double ratio);
/// (31 - 2 sqrt 58) / 18, the ratio where polar_normalized_bound equals 1.
double polar_threshold_ratio();

/// Exact double loop over all |G|^2 pairs. Does not require admissibility;
/// the residual is carried in the report. kMissingIrrepTable without d_min.
DefectReport defect_direct(const MatrixFunction& psi, std::optional<std::size_t> d_min,
                           const Tolerances& tol = default_tolerances());

/// Triple trace as sum_rho d_rho tr(B B^dag B) with B = E_x psi(x) (x) rho(x);
/// defect = E||psi||_F^2 + tr(E psi^dag psi E psi psi^dag) - 2 Re(triple),
/// which reduces to 2 d (1 - Re(triple)/d) for admissible psi. The agreement
/// probability is a pair count and is taken by the same exact loop as the
/// direct route. kIncompleteTable for an incomplete table.
DefectReport defect_via_fourier(const MatrixFunction& psi, const IrrepTable& table,
                                const Tolerances& tol = default_tolerances());

/// Exact pair count behind agreement_prob.
double agreement_probability(const MatrixFunction& psi, const Tolerances& tol = default_tolerances());

/// ||E_x psi(x) (x) rho(x)||_op. For admissible psi and nontrivial irreducible
/// rho this is at most sqrt(d_psi / d_rho).
double opnorm_fourier_block(const MatrixFunction& psi, const UnitaryRep& rho);

/// Subspace choice for minors.
struct LeadingSubspace {};
struct HaarSubspace {
  std::uint64_t seed = 0;
};
using SubspaceChoice = std::variant<LeadingSubspace, HaarSubspace>;

/// Orthonormal d_rho x d_psi basis of the chosen subspace W.
Matrix subspace_basis(std::size_t d_rho, std::size_t d_psi, const SubspaceChoice& choice);

/// psi(x) = sqrt(d_rho/d_psi) Pi rho(x) Pi written in an orthonormal basis of
/// W = range(Pi), i.e. d_psi x d_psi matrices. Checks E psi = 0 and
/// E psi^dag psi = 1_W (kToleranceViolation otherwise). kDimensionError
/// unless 1 <= d_psi <= d_rho.
MatrixFunction minor_construction(const UnitaryRep& rho, std::size_t d_psi,
                                  const SubspaceChoice& choice,
                                  const Tolerances& tol = default_tolerances());

/// Same minor kept in the ambient space (d_rho x d_rho, zero off W) with the
/// projector Pi recorded as its support.
MatrixFunction minor_in_ambient_space(const UnitaryRep& rho, const Matrix& basis);

/// Unitary factor of the polar decomposition, A (A^dag A)^{-1/2} = U V^dag
/// from the SVD A = U S V^dag. kRankDeficient when the smallest singular
/// value is below `tol.rank`.
Matrix polar_unitary(const Matrix& a, const Tolerances& tol = default_tolerances());

struct PolarMinor {
  MatrixFunction polar;  // unitary parts
  MatrixFunction minor;  // the parent minor
  std::uint64_t seed_used = 0;
  /// E_x ||psi(x) - psi~(x)||_F^2
  double polar_residual() const;
};

/// Polar decomposition of a Haar-random minor, redrawing the subspace (up to
/// `tol.polar_retries` times) if some psi(x) is rank deficient.
PolarMinor polar_construction(const UnitaryRep& rho, std::size_t d_psi, std::uint64_t seed,
                              const Tolerances& tol = default_tolerances());

/// d = 1; a uniformly random half of G goes to +1, the rest to -1.
/// kOddOrder for odd |G|.
MatrixFunction random_sign_function(GroupPtr group, std::uint64_t seed);

/// Independent Haar unitary per element.
MatrixFunction haar_baseline(GroupPtr group, std::size_t d, std::uint64_t seed);

/// Gaussian matrices A(x) renormalized to psi(x) = A(x) S^{-1/2},
/// S = E A^dag A, so psi is unitary in expectation but not unitary.
MatrixFunction random_admissible(GroupPtr group, std::size_t d, std::uint64_t seed);

/// rho(x) exp(i t H_x) with independent random Hermitian H_x of unit
/// Frobenius norm: unitary, close to rho for small t.
MatrixFunction perturbed_irrep(const UnitaryRep& rho, double strength, std::uint64_t seed);

/// The irrep itself as a matrix function.
MatrixFunction as_matrix_function(const UnitaryRep& rho);

}  // namespace quasirep

#endif  // QUASIREP_APPROX_REP_HPP
