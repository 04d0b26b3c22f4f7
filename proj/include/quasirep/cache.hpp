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

#ifndef QUASIREP_CACHE_HPP
#define QUASIREP_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "quasirep/group.hpp"
#include "quasirep/repr.hpp"

namespace quasirep {

/// `flag` if given, else $QUASIREP_CACHE, else ./.quasirep.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Writes to a temporary sibling and renames it over `path`, so readers see
/// either the old file or the complete new one.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// Content-addressed store of groups (<hash>.group) and irrep tables
/// (<hash>.irreps).
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path group_path(const FiniteGroup& g) const;
  std::filesystem::path irreps_path(const FiniteGroup& g) const;

  /// Stores the group table if it is not already present.
  void store_group(const FiniteGroup& g) const;

  /// Cached table if present and readable, otherwise decomposes with `seed`
  /// and stores the result. An unreadable cache entry is replaced.
  IrrepTable load_or_decompose(const GroupPtr& g, std::uint64_t seed,
                               const Tolerances& tol = default_tolerances()) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace quasirep

#endif  // QUASIREP_CACHE_HPP
