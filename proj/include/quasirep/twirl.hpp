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

#ifndef QUASIREP_TWIRL_HPP
#define QUASIREP_TWIRL_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "quasirep/config.hpp"
#include "quasirep/repr.hpp"

namespace quasirep {

/// A permutation of {0,1,2,3}: p[k] is the image of k.
using Perm4 = std::array<std::uint8_t, 4>;

inline constexpr std::size_t kS4Order = 24;
inline constexpr std::size_t kS4Classes = 5;

/// Classes of S4 in the fixed order e, (12), (123), (12)(34), (1234), and
/// irreps labelled by the partitions (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct S4Data {
  std::array<Perm4, kS4Order> elements;           // lexicographic order
  std::array<std::size_t, kS4Order> class_of;
  std::array<Perm4, kS4Classes> representatives;
  std::array<std::size_t, kS4Classes> class_sizes;
  std::array<int, kS4Classes> cycles;             // c(sigma)
  std::array<std::vector<int>, kS4Classes> partitions;
  std::array<int, kS4Classes> irrep_dims;
  /// characters[lambda][class]
  std::array<std::array<int, kS4Classes>, kS4Classes> characters;

  static const S4Data& get();
};

std::string_view s4_class_name(std::size_t c);
int cycle_count(const Perm4& p);
/// Transposition distance 4 - c(p).
int transposition_distance(const Perm4& p);
/// Cycle-type class index of p.
std::size_t s4_class(const Perm4& p);
/// (p q)(k) = p(q(k))
Perm4 compose(const Perm4& p, const Perm4& q);
Perm4 inverse(const Perm4& p);

/// Semistandard tableaux of shape lambda with entries at most d, by the
/// hook-content formula prod (d + content) / hook.
std::uint64_t tableau_count(const std::vector<int>& lambda, std::uint64_t d);

/// tr P^{(x)4} sigma = d_psi^{c(sigma)} for a rank-d_psi projector P.
std::uint64_t moment_trace(const Perm4& sigma, std::uint64_t d_psi);

/// Coefficients of E_U (U^dag Pi U)^{(x)4} = sum_pi upsilon(pi) pi, one per class.
struct TwirlExpansion {
  std::size_t d_rho = 0;
  std::size_t d_psi = 0;
  std::array<double, kS4Classes> coefficients{};
};

/// upsilon(pi) = (1/24) sum_lambda d_lambda chi_lambda(pi) T(lambda, d_psi) / T(lambda, d_rho).
/// kDegenerateDimension if d_rho < 4, kDimensionError unless 1 <= d_psi <= d_rho.
TwirlExpansion twirl_exact(std::size_t d_rho, std::size_t d_psi);

/// <sigma, Upsilon> = sum_pi upsilon(pi) d_rho^{c(sigma pi^{-1})} for a class
/// representative sigma: the trace side of the Gram system.
double twirl_contraction(const TwirlExpansion& t, const Perm4& sigma);

/// G[s][c] = sum_{pi in class c} d^{c(rep_s pi^{-1})}.
Eigen::MatrixXd collapsed_gram(std::size_t d_rho);

struct TwirlMonteCarlo {
  /// Entry estimator: upsilon(pi) = <a| Upsilon |a o pi> for distinct indices
  /// a, averaged over Haar samples (and over disjoint index blocks inside a sample).
  TwirlExpansion expansion;
  std::array<double, kS4Classes> standard_errors{};
  /// Entry estimates for all 24 permutations, aligned with S4Data::elements.
  std::array<double, kS4Order> raw{};
  std::array<double, kS4Order> raw_stderr{};
  /// Sample means of tr((U^dag Pi U)^{(x)4} sigma^{-1}) at class representatives.
  std::array<double, kS4Classes> trace_moments{};
  /// Coefficients from solving the collapsed Gram system against trace_moments.
  std::array<double, kS4Classes> gram_coefficients{};
  double gram_condition = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// kDegenerateDimension if d_rho < 4, kDimensionError if d_rho > 14 or
/// d_psi outside [1, d_rho], kIllConditionedGram when cond(G) exceeds
/// `tol.gram_condition`.
TwirlMonteCarlo twirl_monte_carlo(std::size_t d_rho, std::size_t d_psi, std::size_t samples,
                                  std::uint64_t seed, const Tolerances& tol = default_tolerances());

struct ErrorTermAudit {
  std::size_t d_rho = 0;
  std::size_t d_psi = 0;
  double monte_carlo = 0;  // route (a): Haar Pi sampled, x averaged exactly
  double monte_carlo_stderr = 0;
  double expansion = 0;    // route (b): twirl coefficients against character moments
  double leading = 0;      // d_rho r^3 (2 - r), r = d_psi / d_rho
  double second_moment = 0;      // E_x |chi(x)|^2
  double fourth_moment = 0;      // E_x |chi(x)|^4
  double square_moment = 0;      // E_x |chi(x^2)|^2
  double mixed_moment = 0;       // Re E_x conj(chi(x^2)) chi(x)^2
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// E_{Pi,x} tr[Pi rho^dag Pi rho Pi rho^dag Pi rho] two ways.
ErrorTermAudit error_term_audit(const UnitaryRep& rho, std::size_t d_psi, std::size_t samples,
                                std::uint64_t seed);

/// Route (b) alone.
double error_term_expansion(const UnitaryRep& rho, const TwirlExpansion& t);

}  // namespace quasirep

#endif  // QUASIREP_TWIRL_HPP
