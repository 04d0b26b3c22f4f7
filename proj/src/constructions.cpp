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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quasirep/approx_rep.hpp"
#include "quasirep/error.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

namespace {

// H^{-1/2} for Hermitian positive definite H.
Matrix inverse_sqrt(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() <= 0) fail(ErrorCode::kRankDeficient, "Gram matrix is not positive definite");
  const Eigen::VectorXd s = ev.array().rsqrt();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

// exp(i H) for Hermitian H.
Matrix unitary_exp(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void check_dims(const UnitaryRep& rho, std::size_t d_psi) {
  if (d_psi < 1 || d_psi > rho.dim())
    fail(ErrorCode::kDimensionError, "minor needs 1 <= d_psi <= d_rho (d_psi = " +
                                         std::to_string(d_psi) + ", d_rho = " +
                                         std::to_string(rho.dim()) + ")");
}

std::vector<Matrix> compress(const UnitaryRep& rho, const Matrix& basis) {
  const double scale = std::sqrt(static_cast<double>(rho.dim()) / static_cast<double>(basis.cols()));
  std::vector<Matrix> out;
  out.reserve(rho.group().order());
  for (const auto& m : rho.matrices()) out.emplace_back(scale * (basis.adjoint() * m * basis));
  return out;
}

}  // namespace

Matrix subspace_basis(std::size_t d_rho, std::size_t d_psi, const SubspaceChoice& choice) {
  const auto n = static_cast<Eigen::Index>(d_rho);
  const auto k = static_cast<Eigen::Index>(d_psi);
  if (std::holds_alternative<LeadingSubspace>(choice)) return Matrix::Identity(n, k);
  Rng rng = make_rng(std::get<HaarSubspace>(choice).seed);
  return haar_unitary(rng, n).leftCols(k);
}

MatrixFunction minor_construction(const UnitaryRep& rho, std::size_t d_psi,
                                  const SubspaceChoice& choice, const Tolerances& tol) {
  check_dims(rho, d_psi);
  MatrixFunction psi(rho.group_ptr(), compress(rho, subspace_basis(rho.dim(), d_psi, choice)));
  // a nontrivial irrep averages to zero; the trivial one gives psi = 1
  const bool trivial = rho.dim() == 1 && std::all_of(rho.class_character().begin(),
                                                     rho.class_character().end(),
                                                     [](Complex c) { return std::abs(c - 1.0) < 1e-9; });
  if (!trivial && psi.mean().norm() > tol.admissibility)
    fail(ErrorCode::kToleranceViolation, "minor has nonzero mean; is rho irreducible?");
  if (psi.admissibility_residual() > tol.admissibility)
    fail(ErrorCode::kToleranceViolation, "minor is not unitary in expectation; is rho irreducible?");
  return psi;
}

MatrixFunction minor_in_ambient_space(const UnitaryRep& rho, const Matrix& basis) {
  const double scale = std::sqrt(static_cast<double>(rho.dim()) / static_cast<double>(basis.cols()));
  const Matrix pi = basis * basis.adjoint();
  std::vector<Matrix> out;
  out.reserve(rho.group().order());
  for (const auto& m : rho.matrices()) out.emplace_back(scale * (pi * m * pi));
  return MatrixFunction(rho.group_ptr(), std::move(out), pi);
}

Matrix polar_unitary(const Matrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) fail(ErrorCode::kDimensionError, "polar decomposition needs a square matrix");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues().minCoeff();
  if (smin < tol.rank)
    fail(ErrorCode::kRankDeficient, "smallest singular value " + std::to_string(smin) + " below rank tolerance");
  return svd.matrixU() * svd.matrixV().adjoint();
}

double PolarMinor::polar_residual() const {
  double s = 0;
  for (std::size_t x = 0; x < minor.matrices.size(); ++x)
    s += (minor.matrices[x] - polar.matrices[x]).squaredNorm();
  return s / static_cast<double>(minor.matrices.size());
}

PolarMinor polar_construction(const UnitaryRep& rho, std::size_t d_psi, std::uint64_t seed,
                              const Tolerances& tol) {
  check_dims(rho, d_psi);
  const std::size_t attempts = std::max<std::size_t>(1, tol.polar_retries);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, attempt);
    MatrixFunction minor = minor_construction(rho, d_psi, HaarSubspace{s}, tol);
    std::vector<Matrix> unitary;
    unitary.reserve(minor.matrices.size());
    try {
      for (const auto& m : minor.matrices) unitary.push_back(polar_unitary(m, tol));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kRankDeficient) continue;
      throw;
    }
    MatrixFunction polar(rho.group_ptr(), std::move(unitary));
    return PolarMinor{std::move(polar), std::move(minor), s};
  }
  fail(ErrorCode::kRankDeficient, "every redrawn minor had a rank-deficient element after " +
                                      std::to_string(attempts) + " attempts");
}

MatrixFunction random_sign_function(GroupPtr group, std::uint64_t seed) {
  const std::size_t n = group->order();
  if (n % 2 != 0) fail(ErrorCode::kOddOrder, "sign function needs even |G|, got " + std::to_string(n));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Matrix> out(n, Matrix::Constant(1, 1, Complex(-1.0)));
  for (std::size_t k = 0; k < n / 2; ++k) out[perm[k]](0, 0) = 1.0;
  return MatrixFunction(std::move(group), std::move(out));
}

MatrixFunction haar_baseline(GroupPtr group, std::size_t d, std::uint64_t seed) {
  if (d < 1) fail(ErrorCode::kDimensionError, "Haar baseline needs d >= 1");
  std::vector<Matrix> out;
  out.reserve(group->order());
  for (std::size_t x = 0; x < group->order(); ++x) {
    Rng rng = make_rng(seed, x);
    out.push_back(haar_unitary(rng, static_cast<Eigen::Index>(d)));
  }
  return MatrixFunction(std::move(group), std::move(out));
}

MatrixFunction random_admissible(GroupPtr group, std::size_t d, std::uint64_t seed) {
  if (d < 1) fail(ErrorCode::kDimensionError, "random admissible function needs d >= 1");
  const auto dd = static_cast<Eigen::Index>(d);
  std::vector<Matrix> a;
  a.reserve(group->order());
  Matrix s = Matrix::Zero(dd, dd);
  for (std::size_t x = 0; x < group->order(); ++x) {
    Rng rng = make_rng(seed, x);
    a.push_back(gaussian_matrix(rng, dd, dd));
    s.noalias() += a.back().adjoint() * a.back();
  }
  s /= static_cast<double>(group->order());
  const Matrix w = inverse_sqrt(s);
  for (auto& m : a) m = m * w;
  return MatrixFunction(std::move(group), std::move(a));
}

MatrixFunction perturbed_irrep(const UnitaryRep& rho, double strength, std::uint64_t seed) {
  const auto d = static_cast<Eigen::Index>(rho.dim());
  std::vector<Matrix> out;
  out.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    Rng rng = make_rng(seed, x);
    Matrix h = random_hermitian(rng, d);
    h /= h.norm();
    out.push_back(rho(static_cast<Element>(x)) * unitary_exp(strength * h));
  }
  return MatrixFunction(rho.group_ptr(), std::move(out));
}

MatrixFunction as_matrix_function(const UnitaryRep& rho) {
  return MatrixFunction(rho.group_ptr(), rho.matrices());
}

}  // namespace quasirep
