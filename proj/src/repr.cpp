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

#include "quasirep/repr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "quasirep/error.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

UnitaryRep::UnitaryRep(GroupPtr group, std::vector<Matrix> matrices, const Tolerances& tol)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (!group_) fail(ErrorCode::kInvalidArgument, "representation needs a group");
  if (matrices_.size() != group_->order())
    fail(ErrorCode::kDimensionError, "need one matrix per group element");
  dim_ = static_cast<std::size_t>(matrices_.front().rows());
  for (const auto& m : matrices_)
    if (static_cast<std::size_t>(m.rows()) != dim_ || static_cast<std::size_t>(m.cols()) != dim_)
      fail(ErrorCode::kDimensionError, "representation matrices must be square of one size");

  const auto& classes = group_->classes();
  const double n = static_cast<double>(group_->order());
  character_.reserve(classes.size());
  character_norm_ = 0;
  for (const auto& cls : classes) {
    const Complex chi = matrices_[cls.front()].trace();
    character_.push_back(chi);
    character_norm_ += static_cast<double>(cls.size()) * std::norm(chi) / n;
  }
  irreducible_ = std::abs(character_norm_ - 1.0) <= tol.irreducibility;
}

RepResiduals representation_residuals(const UnitaryRep& rep, const Tolerances& tol) {
  const FiniteGroup& g = rep.group();
  const std::size_t n = g.order();
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const Matrix eye = Matrix::Identity(d, d);
  RepResiduals r;
  r.identity = (rep(g.identity()) - eye).cwiseAbs().maxCoeff();
  for (Element x = 0; x < n; ++x)
    r.unitarity = std::max(r.unitarity, (rep(x).adjoint() * rep(x) - eye).norm());

  Matrix prod(d, d);
  auto pair = [&](Element x, Element y) {
    prod.noalias() = rep(x) * rep(y);
    r.homomorphism = std::max(r.homomorphism, (prod - rep(g.mul(x, y))).norm());
  };
  if (n <= tol.homomorphism_exhaustive_max) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) pair(x, y);
  } else {
    Rng rng = make_rng(0x5eedULL, n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t s = 0; s < tol.homomorphism_samples; ++s) pair(pick(rng), pick(rng));
  }
  return r;
}

Matrix RegularRepresentation::matrix(Element x) const {
  const auto n = static_cast<Eigen::Index>(dim());
  Matrix m = Matrix::Zero(n, n);
  for (Element y = 0; y < static_cast<Element>(n); ++y) m(image(x, y), y) = 1.0;
  return m;
}

Complex RegularRepresentation::character(Element x) const {
  double fixed = 0;
  for (Element y = 0; y < group_->order(); ++y) fixed += image(x, y) == y ? 1.0 : 0.0;
  return fixed;
}

std::vector<Complex> RegularRepresentation::class_character() const {
  std::vector<Complex> chi;
  for (const auto& cls : group_->classes()) chi.push_back(character(cls.front()));
  return chi;
}

RegularRepresentation regular_representation(GroupPtr group, const Tolerances& tol) {
  if (group->order() > tol.decomposition_cap)
    fail(ErrorCode::kOrderCapExceeded, "regular representation is capped at order " +
                                           std::to_string(tol.decomposition_cap));
  return RegularRepresentation(std::move(group));
}

IrrepTable::IrrepTable(GroupPtr group, std::vector<UnitaryRep> irreps)
    : group_(std::move(group)), irreps_(std::move(irreps)) {
  for (std::size_t i = 1; i < irreps_.size(); ++i)
    if (d_min_ == 0 || irreps_[i].dim() < d_min_) d_min_ = irreps_[i].dim();
}

std::vector<std::size_t> IrrepTable::dims() const {
  std::vector<std::size_t> d;
  for (const auto& r : irreps_) d.push_back(r.dim());
  return d;
}

Matrix IrrepTable::character_table() const {
  Matrix t(static_cast<Eigen::Index>(group_->class_count()), static_cast<Eigen::Index>(size()));
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t c = 0; c < group_->class_count(); ++c)
      t(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(j)) = irreps_[j].class_character()[c];
  return t;
}

bool IrrepTable::is_complete() const noexcept {
  std::size_t sum = 0;
  for (const auto& r : irreps_) sum += r.dim() * r.dim();
  return sum == group_->order() && irreps_.size() == group_->class_count();
}

std::size_t IrrepTable::dual(std::size_t i, double tol) const {
  const auto& chi = irreps_[i].class_character();
  for (std::size_t j = 0; j < size(); ++j) {
    const auto& other = irreps_[j].class_character();
    bool match = true;
    for (std::size_t c = 0; c < chi.size() && match; ++c)
      match = std::abs(other[c] - std::conj(chi[c])) <= tol;
    if (match) return j;
  }
  fail(ErrorCode::kIncompleteTable, "no dual irrep in the table");
}

namespace {

// Orthonormal basis (n x d) of an R-invariant subspace together with its
// class character.
struct Piece {
  Matrix basis;
  std::vector<Complex> chi;
  double norm = 0;
};

// (R(x) W)(z, :) = W(x^-1 z, :)
void translate_rows(const FiniteGroup& g, const Matrix& w, Element x, Matrix& out) {
  const Element xi = g.inverse(x);
  out.resize(w.rows(), w.cols());
  for (Element z = 0; z < g.order(); ++z) out.row(z) = w.row(g.mul(xi, z));
}

Piece make_piece(const FiniteGroup& g, Matrix basis) {
  Piece p;
  p.basis = std::move(basis);
  const double n = static_cast<double>(g.order());
  for (const auto& cls : g.classes()) {
    const Element xi = g.inverse(cls.front());
    Complex chi = 0;
    for (Element z = 0; z < g.order(); ++z)
      chi += p.basis.row(z).dot(p.basis.row(g.mul(xi, z)));
    p.chi.push_back(chi);
    p.norm += static_cast<double>(cls.size()) * std::norm(chi) / n;
  }
  return p;
}

// Splits an eigendecomposition into eigenspaces by clustering sorted
// eigenvalues; returns column ranges [begin, end).
std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_eigenvalues(
    const Eigen::VectorXd& evals, double rel_tol) {
  const double scale = std::max(std::abs(evals(0)), std::abs(evals(evals.size() - 1)));
  const double tol = rel_tol * std::max(scale, 1e-300);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> ranges;
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= evals.size(); ++i) {
    if (i == evals.size() || evals(i) - evals(i - 1) > tol) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  return ranges;
}

// Eigenspaces of T = E_x R(x) M R(x)^dag on the full regular representation.
// Such T is constant along left translation: T(a, b) = t(a^-1 b) with
// t(h) = E_z M(z, z h), so it is built in O(|G|^2).
std::vector<Matrix> split_regular(const FiniteGroup& g, Rng& rng, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(g.order());
  const Matrix m = random_hermitian(rng, n);
  std::vector<Complex> t(g.order(), 0.0);
  for (Element z = 0; z < g.order(); ++z)
    for (Element h = 0; h < g.order(); ++h) t[h] += m(z, g.mul(z, h));
  for (auto& v : t) v /= static_cast<double>(n);

  Matrix big(n, n);
  for (Element a = 0; a < g.order(); ++a) {
    const Element ai = g.inverse(a);
    for (Element b = 0; b < g.order(); ++b) big(a, b) = t[g.mul(ai, b)];
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(big);
  if (es.info() != Eigen::Success) fail(ErrorCode::kDecompositionFailed, "eigensolver did not converge");
  std::vector<Matrix> spaces;
  for (auto [b, e] : cluster_eigenvalues(es.eigenvalues(), tol.eigen_cluster))
    spaces.push_back(es.eigenvectors().middleCols(b, e - b));
  return spaces;
}

// Same as split_regular for an invariant subspace with basis W (n x k),
// working with the restricted k x k matrices W^dag R(x) W.
std::vector<Matrix> split_subspace(const FiniteGroup& g, const Matrix& w, Rng& rng,
                                   const Tolerances& tol) {
  const Eigen::Index k = w.cols();
  const Matrix m = random_hermitian(rng, k);
  Matrix t = Matrix::Zero(k, k);
  Matrix rw, r;
  for (Element x = 0; x < g.order(); ++x) {
    translate_rows(g, w, x, rw);
    r.noalias() = w.adjoint() * rw;
    t.noalias() += r * m * r.adjoint();
  }
  t /= static_cast<double>(g.order());
  Eigen::SelfAdjointEigenSolver<Matrix> es(t);
  if (es.info() != Eigen::Success) fail(ErrorCode::kDecompositionFailed, "eigensolver did not converge");
  std::vector<Matrix> spaces;
  for (auto [b, e] : cluster_eigenvalues(es.eigenvalues(), tol.eigen_cluster))
    spaces.push_back(w * es.eigenvectors().middleCols(b, e - b));
  return spaces;
}

bool characters_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (std::abs(a[c] - b[c]) > tol) return false;
  return true;
}

// Strict weak order used for the canonical irrep ordering.
bool character_less(const UnitaryRep& a, const UnitaryRep& b, double tol) {
  const bool a_trivial = a.dim() == 1 && characters_match(a.class_character(),
                              std::vector<Complex>(a.class_character().size(), 1.0), tol);
  const bool b_trivial = b.dim() == 1 && characters_match(b.class_character(),
                              std::vector<Complex>(b.class_character().size(), 1.0), tol);
  if (a_trivial != b_trivial) return a_trivial;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& x = a.class_character();
  const auto& y = b.class_character();
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (std::abs(x[c].real() - y[c].real()) > tol) return x[c].real() < y[c].real();
    if (std::abs(x[c].imag() - y[c].imag()) > tol) return x[c].imag() < y[c].imag();
  }
  return false;
}

}  // namespace

IrrepTable decompose(GroupPtr group, std::uint64_t seed, const Tolerances& tol) {
  const FiniteGroup& g = *group;
  if (g.order() > tol.decomposition_cap)
    fail(ErrorCode::kOrderCapExceeded,
         "decomposition is capped at order " + std::to_string(tol.decomposition_cap));

  Rng rng = make_rng(seed, 0);
  std::vector<Piece> irreducible;
  std::function<void(Matrix, std::size_t)> process = [&](Matrix basis, std::size_t depth) {
    Piece p = make_piece(g, std::move(basis));
    if (std::abs(p.norm - 1.0) <= tol.irreducibility) {
      irreducible.push_back(std::move(p));
      return;
    }
    if (depth >= tol.decomposition_retries)
      fail(ErrorCode::kDecompositionFailed,
           "invariant subspace of dimension " + std::to_string(p.basis.cols()) +
               " still reducible after " + std::to_string(depth) + " reseeded splits");
    for (auto& sub : split_subspace(g, p.basis, rng, tol)) process(std::move(sub), depth + 1);
  };
  for (auto& space : split_regular(g, rng, tol)) process(std::move(space), 0);

  // One representative per character; every irrep occurs d times in R.
  std::vector<std::size_t> reps;
  std::vector<std::size_t> multiplicity;
  for (std::size_t i = 0; i < irreducible.size(); ++i) {
    bool found = false;
    for (std::size_t u = 0; u < reps.size() && !found; ++u)
      if (characters_match(irreducible[reps[u]].chi, irreducible[i].chi, tol.character_match)) {
        ++multiplicity[u];
        found = true;
      }
    if (!found) {
      reps.push_back(i);
      multiplicity.push_back(1);
    }
  }
  for (std::size_t u = 0; u < reps.size(); ++u)
    if (multiplicity[u] != static_cast<std::size_t>(irreducible[reps[u]].basis.cols()))
      fail(ErrorCode::kToleranceViolation,
           "irrep of dimension " + std::to_string(irreducible[reps[u]].basis.cols()) +
               " found with multiplicity " + std::to_string(multiplicity[u]));

  std::vector<UnitaryRep> irreps;
  irreps.reserve(reps.size());
  Matrix rw;
  for (std::size_t u : reps) {
    const Matrix& w = irreducible[u].basis;
    std::vector<Matrix> mats(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      translate_rows(g, w, x, rw);
      mats[x].noalias() = w.adjoint() * rw;
    }
    irreps.emplace_back(group, std::move(mats), tol);
  }
  std::sort(irreps.begin(), irreps.end(), [&](const UnitaryRep& a, const UnitaryRep& b) {
    return character_less(a, b, tol.character_match);
  });

  IrrepTable table(group, std::move(irreps));
  if (!table.is_complete()) {
    std::size_t sum = 0;
    for (auto d : table.dims()) sum += d * d;
    fail(ErrorCode::kToleranceViolation,
         "incomplete decomposition: sum d^2 = " + std::to_string(sum) + " for order " +
             std::to_string(g.order()) + ", " + std::to_string(table.size()) + " irreps for " +
             std::to_string(g.class_count()) + " classes");
  }
  for (const auto& rho : table.irreps()) {
    const RepResiduals r = representation_residuals(rho, tol);
    if (r.identity > tol.unit || r.homomorphism > tol.unit || r.unitarity > tol.unitarity)
      fail(ErrorCode::kToleranceViolation,
           "irrep of dimension " + std::to_string(rho.dim()) + " fails the representation axioms");
  }
  return table;
}

Complex frobenius_schur_raw(const UnitaryRep& rho) {
  const FiniteGroup& g = rho.group();
  Complex sum = 0;
  for (Element x = 0; x < g.order(); ++x) sum += rho.character(g.mul(x, x));
  return sum / static_cast<double>(g.order());
}

int frobenius_schur(const UnitaryRep& rho, const Tolerances& tol) {
  const Complex raw = frobenius_schur_raw(rho);
  const double rounded = std::round(raw.real());
  if (std::abs(raw - Complex(rounded, 0)) > tol.frobenius_schur || std::abs(rounded) > 1)
    fail(ErrorCode::kToleranceViolation,
         "Frobenius-Schur value " + std::to_string(raw.real()) + " is not in {-1, 0, 1}");
  return static_cast<int>(rounded);
}

TensorSquareStats tensor_square_stats(const UnitaryRep& rho) {
  const FiniteGroup& g = rho.group();
  TensorSquareStats s;
  for (Element x = 0; x < g.order(); ++x) {
    const double a = std::norm(rho.character(x));
    s.fourth_moment += a * a;
    s.square_moment += std::norm(rho.character(g.mul(x, x)));
  }
  s.fourth_moment /= static_cast<double>(g.order());
  s.square_moment /= static_cast<double>(g.order());
  if (s.square_moment > s.fourth_moment + 1e-9)
    fail(ErrorCode::kToleranceViolation, "E|chi(x^2)|^2 exceeds E|chi(x)|^4");
  return s;
}

double schur_orthogonality_residual(const IrrepTable& table) {
  const FiniteGroup& g = table.group();
  const double n = static_cast<double>(g.order());
  double worst = 0;
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table.size(); ++b) {
      const auto da = static_cast<Eigen::Index>(table[a].dim());
      const auto db = static_cast<Eigen::Index>(table[b].dim());
      // acc(i*db + k, j*db + l) = E rho_ij conj(sigma_kl)
      Matrix acc = Matrix::Zero(da * db, da * db);
      for (Element x = 0; x < g.order(); ++x) {
        const Matrix& r = table[a](x);
        const Matrix s = table[b](x).conjugate();
        for (Eigen::Index i = 0; i < da; ++i)
          for (Eigen::Index j = 0; j < da; ++j)
            acc.block(i * db, j * db, db, db) += r(i, j) * s;
      }
      acc /= n;
      if (a == b)
        for (Eigen::Index i = 0; i < da; ++i)
          for (Eigen::Index j = 0; j < da; ++j) acc(i * db + i, j * db + j) -= 1.0 / static_cast<double>(da);
      worst = std::max(worst, acc.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double character_orthonormality_residual(const IrrepTable& table) {
  const FiniteGroup& g = table.group();
  const auto sizes = g.class_sizes();
  const double n = static_cast<double>(g.order());
  double worst = 0;
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = 0; b < table.size(); ++b) {
      Complex ip = 0;
      for (std::size_t c = 0; c < sizes.size(); ++c)
        ip += static_cast<double>(sizes[c]) * std::conj(table[a].class_character()[c]) *
              table[b].class_character()[c];
      ip /= n;
      worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

double symmetrized_projector_residual(const UnitaryRep& rho, const Matrix& projector) {
  const FiniteGroup& g = rho.group();
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Matrix acc = Matrix::Zero(d, d);
  for (Element x = 0; x < g.order(); ++x) acc.noalias() += rho(x).adjoint() * projector * rho(x);
  acc /= static_cast<double>(g.order());
  const double rank = projector.trace().real();
  return (acc - (rank / static_cast<double>(d)) * Matrix::Identity(d, d)).norm();
}

}  // namespace quasirep
