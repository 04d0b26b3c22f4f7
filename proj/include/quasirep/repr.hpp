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

#ifndef QUASIREP_REPR_HPP
#define QUASIREP_REPR_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "quasirep/config.hpp"
#include "quasirep/group.hpp"

namespace quasirep {

/// A unitary representation stored densely: one d x d matrix per element.
///
/// The character is kept per conjugacy class (evaluated on the first element
/// of each class). `is_irreducible()` is the test E_x |chi(x)|^2 = 1 within
/// the irreducibility tolerance.
class UnitaryRep {
 public:
  UnitaryRep(GroupPtr group, std::vector<Matrix> matrices,
             const Tolerances& tol = default_tolerances());

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }

  const Matrix& operator()(Element x) const { return matrices_[x]; }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }

  Complex character(Element x) const { return character_[group_->class_of(x)]; }
  const std::vector<Complex>& class_character() const noexcept { return character_; }
  /// E_x |chi(x)|^2
  double character_norm() const noexcept { return character_norm_; }
  bool is_irreducible() const noexcept { return irreducible_; }

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
  std::vector<Complex> character_;
  double character_norm_ = 0;
  bool irreducible_ = false;
};

struct RepResiduals {
  double identity = 0;      // ||rho(e) - 1||, max entry
  double homomorphism = 0;  // max ||rho(x)rho(y) - rho(xy)||_F over checked pairs
  double unitarity = 0;     // max ||rho(x)^dag rho(x) - 1||_F
};

/// Residuals of the representation axioms. Pairs are exhaustive up to
/// `tol.homomorphism_exhaustive_max` elements, sampled above.
RepResiduals representation_residuals(const UnitaryRep& rep,
                                      const Tolerances& tol = default_tolerances());

/// Left regular representation R(x) e_y = e_{xy}, kept in permutation form.
/// Dense R(x) for |G| = 700 would be 7.8 MB per element; `matrix(x)` builds
/// one on demand.
class RegularRepresentation {
 public:
  explicit RegularRepresentation(GroupPtr group) : group_(std::move(group)) {}

  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t dim() const noexcept { return group_->order(); }

  /// Row index of the single 1 in column y of R(x).
  Element image(Element x, Element y) const noexcept { return group_->mul(x, y); }
  Matrix matrix(Element x) const;
  /// Number of fixed points of left translation by x.
  Complex character(Element x) const;
  std::vector<Complex> class_character() const;

 private:
  GroupPtr group_;
};

/// Throws kOrderCapExceeded above `tol.decomposition_cap`.
RegularRepresentation regular_representation(GroupPtr group,
                                             const Tolerances& tol = default_tolerances());

/// The complete list of irreps of a group, one per isomorphism class.
///
/// Ordering: the trivial irrep first, then by dimension, then by character
/// values (real part, then imaginary part, class by class). The ordering only
/// depends on characters, so it is the same for every decomposition seed.
class IrrepTable {
 public:
  IrrepTable(GroupPtr group, std::vector<UnitaryRep> irreps);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return irreps_.size(); }
  const UnitaryRep& operator[](std::size_t i) const { return irreps_[i]; }
  const std::vector<UnitaryRep>& irreps() const noexcept { return irreps_; }

  std::vector<std::size_t> dims() const;
  /// Smallest dimension among nontrivial irreps; 0 for the trivial group,
  /// which has none.
  std::size_t d_min() const noexcept { return d_min_; }
  /// classes x irreps
  Matrix character_table() const;
  /// Sum of d^2 equals |G| and the irrep count equals the class count.
  bool is_complete() const noexcept;
  /// Index of the irrep whose character is the conjugate of irrep i.
  std::size_t dual(std::size_t i, double tol = 1e-6) const;

 private:
  GroupPtr group_;
  std::vector<UnitaryRep> irreps_;
  std::size_t d_min_ = 0;
};

/// Splits the regular representation into irreps.
///
/// A seeded random Hermitian M is averaged over the group,
/// T = E_x R(x) M R(x)^dag, which commutes with every R(x). T is
/// eigendecomposed; eigenvalues closer than `tol.eigen_cluster * ||T||_op`
/// form one eigenspace, and each eigenspace of a generic T carries one copy
/// of one irrep. Eigenspaces failing E|chi|^2 = 1 are split again with a
/// fresh M (kDecompositionFailed after `tol.decomposition_retries` rounds).
/// Pieces are deduplicated by character. The result is checked for
/// completeness and for the representation axioms (kToleranceViolation).
IrrepTable decompose(GroupPtr group, std::uint64_t seed,
                     const Tolerances& tol = default_tolerances());

/// E_x chi(x^2) rounded to {-1, 0, +1}; kToleranceViolation if the raw value
/// is not within `tol.frobenius_schur` of one of them.
int frobenius_schur(const UnitaryRep& rho, const Tolerances& tol = default_tolerances());

/// Unrounded E_x chi(x^2).
Complex frobenius_schur_raw(const UnitaryRep& rho);

struct TensorSquareStats {
  double fourth_moment = 0;  // E_x |chi(x)|^4
  double square_moment = 0;  // E_x |chi(x^2)|^2
};

TensorSquareStats tensor_square_stats(const UnitaryRep& rho);

/// max over irrep pairs and indices of
/// |E_x rho(x)_ij conj(sigma(x)_kl) - [rho = sigma] delta_ik delta_jl / d|.
double schur_orthogonality_residual(const IrrepTable& table);

/// max |<chi_i, chi_j> - delta_ij| under the class-weighted inner product.
double character_orthonormality_residual(const IrrepTable& table);

/// ||E_x rho(x)^dag P rho(x) - (rank P / d) 1||_F for a projector P.
double symmetrized_projector_residual(const UnitaryRep& rho, const Matrix& projector);

// Irrep file: "quasirep-irreps v1", "hash=<64 hex>", "count=<k>", then per
// irrep "dim=<d>" followed by |G| blocks of d rows, each row d "<re> <im>"
// pairs at 17 significant digits. Reading back reproduces every double.
void write_irreps(std::ostream& out, const IrrepTable& table);
IrrepTable read_irreps(std::istream& in, GroupPtr group,
                       const Tolerances& tol = default_tolerances());
void save_irreps(const IrrepTable& table, const std::filesystem::path& path);
IrrepTable load_irreps(const std::filesystem::path& path, GroupPtr group,
                       const Tolerances& tol = default_tolerances());

}  // namespace quasirep

#endif  // QUASIREP_REPR_HPP
