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

#ifndef QUASIREP_VERIFY_HPP
#define QUASIREP_VERIFY_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "quasirep/config.hpp"

namespace quasirep {

/// One bound comparison. Both sides are always recorded.
struct Measurement {
  std::string name;
  double measured = 0;
  double bound = 0;
  std::string relation;  // "<=", ">=" or "=="
  bool passed = false;
};

struct CheckRecord {
  std::string id;  // "A1".."A10"
  std::string name;
  bool passed = false;
  std::vector<Measurement> measurements;
  /// Runtime limits are kept apart from measurements, so that the
  /// measurement list is identical between runs with the same seed.
  double seconds = 0;
  double time_limit = 0;  // 0 when the criterion has none
  std::string detail;
};

enum class Scope { kFast, kFull };

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Irrep tables are read from and written to this cache when set.
  std::optional<std::filesystem::path> cache_dir;
  Tolerances tolerances = default_tolerances();
  std::size_t twirl_samples = 20000;
  /// Names a deliberately broken check; "plancherel" drops the |G| factor
  /// from the spectral side. Used as a negative control.
  std::string negative_control;
};

/// Criteria ids in a scope: fast is A1..A7, full is A1..A10.
std::vector<int> criteria_in(Scope scope);

/// Runs criterion A<id> (1..10). kInvalidArgument for other ids.
CheckRecord run_criterion(int id, const VerifyOptions& opts);

struct RunManifest {
  std::string version;
  Scope scope = Scope::kFast;
  VerifyOptions options;
  std::vector<CheckRecord> checks;
  double wall_clock_seconds = 0;
  std::string timestamp;  // UTC, ISO 8601

  bool passed() const;
  /// First failing check, empty if all pass.
  std::string first_failure() const;
};

RunManifest run_verify(Scope scope, const VerifyOptions& opts);

/// Timing fields (timestamp, wall clock, per-check seconds) live under a
/// top-level "timing" object; everything else is a function of the options.
std::string manifest_json(const RunManifest& m);

}  // namespace quasirep

#endif  // QUASIREP_VERIFY_HPP
