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

#ifndef QUASIREP_TESTS_SUPPORT_HPP
#define QUASIREP_TESTS_SUPPORT_HPP

#include <map>
#include <memory>
#include <string>

#include "quasirep/group.hpp"
#include "quasirep/repr.hpp"

namespace quasirep::testing {

inline GroupPtr group_for(const std::string& spec) {
  static std::map<std::string, GroupPtr> memo;
  auto& slot = memo[spec];
  if (!slot) slot = std::make_shared<const FiniteGroup>(named_group(spec));
  return slot;
}

// Decomposed once per process; every test of a group shares the table.
inline const IrrepTable& table_for(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<IrrepTable>> memo;
  auto& slot = memo[spec];
  if (!slot) slot = std::make_unique<IrrepTable>(decompose(group_for(spec), 11));
  return *slot;
}

inline const UnitaryRep& irrep_of_dim(const IrrepTable& t, std::size_t d) {
  for (const auto& r : t.irreps())
    if (r.dim() == d) return r;
  throw std::runtime_error("no irrep of dimension " + std::to_string(d));
}

}  // namespace quasirep::testing

#endif  // QUASIREP_TESTS_SUPPORT_HPP
