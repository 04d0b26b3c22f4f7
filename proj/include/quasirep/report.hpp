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

#ifndef QUASIREP_REPORT_HPP
#define QUASIREP_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasirep/approx_hom.hpp"
#include "quasirep/approx_rep.hpp"
#include "quasirep/twirl.hpp"

namespace quasirep {

enum class Construction { kMinor, kPolar };

struct SweepSpec {
  Construction construction = Construction::kMinor;
  /// Irreps by table index; empty means every nontrivial irrep.
  std::vector<std::size_t> irreps;
  std::size_t d_psi_min = 1;
  /// Values above d_rho are clipped per irrep; min > max gives no rows.
  std::size_t d_psi_max = 0;
  std::size_t seeds = 1;
  std::uint64_t seed = 0;
  /// Haar subspaces for minors; polar minors always use them.
  bool random_subspace = false;
};

struct SweepRow {
  std::string group;
  std::string construction;
  std::size_t irrep = 0;
  std::size_t d_rho = 0;
  std::size_t d_psi = 0;
  double ratio = 0;
  std::uint64_t seed = 0;
  DefectReport report;
  double thm4_value = 0;
  double thm5_bound = 0;
  bool beats_random = false;  // normalized defect < 1
};

/// Seed of sweep repetition i.
std::uint64_t sweep_seed(std::uint64_t base, std::size_t i);

std::vector<SweepRow> run_sweep(const IrrepTable& table, const SweepSpec& spec,
                                const Tolerances& tol = default_tolerances());
/// Header always; numbers at 12 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

enum class MapKind { kRandom, kBalancedRandom, kGenuine, kPerturbed, kIdentity };

struct HomSpec {
  MapKind kind = MapKind::kBalancedRandom;
  std::vector<std::pair<Element, Element>> images;  // genuine and perturbed
  double flip_fraction = 0;                          // perturbed
  std::size_t seeds = 1;
  std::uint64_t seed = 0;
};

struct HomRow {
  std::uint64_t seed = 0;
  HomReport report;
};

/// Builds one map per seed (a single map for the deterministic kinds).
std::vector<HomRow> run_hom(const IrrepTable& source, const IrrepTable& target, const HomSpec& spec);
std::string hom_json(const FiniteGroup& g, const FiniteGroup& h, const HomSpec& spec,
                     const std::vector<HomRow>& rows);
void write_hom_csv(std::ostream& out, const std::vector<HomRow>& rows);

/// "<g>:<h>,<g>:<h>" generator images. kParseError on malformed input.
std::vector<std::pair<Element, Element>> parse_images(const std::string& text);
MapKind parse_map_kind(const std::string& name);
Construction parse_construction(const std::string& name);

std::string twirl_json(const TwirlExpansion& exact, const std::optional<TwirlMonteCarlo>& mc);
std::string audit_json(const ErrorTermAudit& a);

/// Text and JSON summaries for the group and irreps commands.
std::string group_summary(const FiniteGroup& g, bool json);
std::string irreps_summary(const IrrepTable& t, bool json, const Tolerances& tol = default_tolerances());

/// One experiment read from a JSON object. Unknown keys are a kParseError.
struct ExperimentConfig {
  std::string command;  // sweep, hom, twirl or audit
  std::string group;
  std::string target;
  std::string construction = "minor";
  std::string generator = "balanced_random";
  std::string images;
  double flip_fraction = 0;
  std::vector<std::size_t> irreps;
  std::size_t d_psi_min = 1;
  std::size_t d_psi_max = 0;
  std::size_t d_rho = 0;
  std::size_t d_psi = 0;
  std::size_t seeds = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool random_subspace = false;
  double tolerance = 1;
  std::string format;
  std::string out;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
std::string experiment_config_json(const ExperimentConfig& c);

}  // namespace quasirep

#endif  // QUASIREP_REPORT_HPP
