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

#ifndef QUASIREP_APPROX_HOM_HPP
#define QUASIREP_APPROX_HOM_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "quasirep/matrix_function.hpp"
#include "quasirep/repr.hpp"

namespace quasirep {

/// A map f : G -> H stored as target indices, with its image distribution.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> values;
  std::vector<double> p_f;  // p_f(y) = |f^{-1}(y)| / |G|
  double epsilon = 0;       // |H| sum_y (p_f(y) - 1/|H|)^2

  GroupMap() = default;
  /// kInvalidArgument unless there is one in-range value per element of G.
  GroupMap(GroupPtr g, GroupPtr h, std::vector<Element> values);

  Element operator()(Element x) const { return values[x]; }
};

struct HomReport {
  double agreement_prob = 0;  // Pr_{x,y}[f(xy) = f(x) f(y)], exact
  double collision_prob = 0;  // Pr_{x,y}[f(x) = f(y)], exact double loop
  double epsilon = 0;
  double thm2_bound = 1;
  /// Index in the target table of the minimizing nontrivial irrep; empty if
  /// H has none.
  std::optional<std::size_t> thm2_sigma;
  double thm3_bound = 1;
  double r_h = 0;
  std::size_t d_min = 0;  // of the source group
};

/// Agreement by an exact |G|^2 loop, both ceilings capped at 1.
/// kMissingIrrepTable when a table belongs to a different group,
/// kIncompleteTable when a table is incomplete.
HomReport evaluate(const GroupMap& f, const IrrepTable& source_table,
                   const IrrepTable& target_table);

/// sum_sigma (d_sigma^2 / |H|) min(sqrt(d_sigma / d_min), 1) over every irrep
/// of H. With d_min = 0 (trivial source group) the ratio is taken as 0.
double r_h(const IrrepTable& target_table, std::size_t d_min);

/// (1 + sqrt(eps / d_sigma) + sqrt(d_sigma / d_min)) / 2, uncapped.
double thm2_term(double epsilon, std::size_t d_sigma, std::size_t d_min);

double agreement_probability(const GroupMap& f);
double collision_probability(const GroupMap& f);
/// (||E_x R_H(f(x))||_F^2 - 1) / |H| evaluated on the dense averaged
/// regular-representation matrix; equals collision_prob - 1/|H|.
double regular_collision_gap(const GroupMap& f);

/// psi_sigma = sigma o f as a matrix function on G.
MatrixFunction lift_through_irrep(const GroupMap& f, const UnitaryRep& sigma);

// Map generators. All are deterministic given the seed.
GroupMap random_map(GroupPtr g, GroupPtr h, std::uint64_t seed);
/// Every target hit floor(|G|/|H|) or one more times; p_f is exactly
/// uniform when |H| divides |G|.
GroupMap balanced_random_map(GroupPtr g, GroupPtr h, std::uint64_t seed);
/// Extends generator images (gens[i] -> images[i]) to a homomorphism.
/// kNotAHomomorphism when the images are inconsistent or the generators do
/// not generate G; the result is validated on all |G|^2 pairs.
GroupMap genuine_hom(GroupPtr g, GroupPtr h, const std::vector<std::pair<Element, Element>>& images);
/// Identity map; kInvalidArgument unless both groups have the same table.
GroupMap identity_map(GroupPtr g, GroupPtr h);
/// Reassigns round(flip_fraction |G|) uniformly chosen elements to a
/// different uniformly chosen target.
GroupMap perturbed_hom(const GroupMap& base, double flip_fraction, std::uint64_t seed);

// Map file: "quasirep-map v1", "source_hash=<hex>", "target_hash=<hex>",
// then |G| lines holding one target index each.
void write_map(std::ostream& out, const GroupMap& f);
GroupMap read_map(std::istream& in, GroupPtr g, GroupPtr h);
void save_map(const GroupMap& f, const std::filesystem::path& path);
GroupMap load_map(const std::filesystem::path& path, GroupPtr g, GroupPtr h);

}  // namespace quasirep

#endif  // QUASIREP_APPROX_HOM_HPP
