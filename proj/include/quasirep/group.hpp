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

#ifndef QUASIREP_GROUP_HPP
#define QUASIREP_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "quasirep/config.hpp"

namespace quasirep {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..n-1; `mul(x, y)` is row x, column y of the
/// table. Instances are immutable and are validated on construction (Latin
/// square, identity, inverses, associativity), so every FiniteGroup that
/// exists is a group. Conjugacy classes are computed eagerly; the class of
/// the identity is always class 0.
class FiniteGroup {
 public:
  /// Validates `table` (row-major n x n) and builds the group.
  /// Throws Error(kNotAGroup) naming a witness on failure.
  static FiniteGroup from_table(std::size_t n, std::vector<Element> table,
                                std::string name = {},
                                const Tolerances& tol = default_tolerances());

  std::size_t order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const noexcept { return table_[x * n_ + y]; }
  Element inverse(Element x) const noexcept { return inverses_[x]; }
  /// x^k for any integer k (negative powers use the inverse).
  Element power(Element x, int k) const noexcept;

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inverses_; }

  const std::vector<std::vector<Element>>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(Element x) const noexcept { return class_of_[x]; }
  std::vector<std::size_t> class_sizes() const;

  bool is_abelian() const noexcept;

  /// SHA-256 over (order, table) as little-endian 32-bit words; 64 hex chars.
  const std::string& hash() const noexcept { return hash_; }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
  std::string name_;
  std::string hash_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Orbit partition of G under conjugation. The identity's class comes first,
/// the rest are ordered by their smallest element.
std::vector<std::vector<Element>> conjugacy_classes(std::size_t n,
                                                    std::span<const Element> table,
                                                    std::span<const Element> inverses,
                                                    Element identity);

/// Closure of `gens` (permutations of 0..degree-1, composed as functions:
/// (p*q)(i) = p(q(i))). Elements are numbered in breadth-first discovery
/// order starting from the identity, multiplying on the right by each
/// generator in the order given. Throws kClosureCapExceeded past `cap`.
FiniteGroup from_permutation_generators(std::size_t degree,
                                        const std::vector<Permutation>& gens,
                                        std::string name = {},
                                        std::size_t cap = default_tolerances().closure_cap);

/// Permutation from cycle notation on 0..degree-1, e.g. {{0,1,2},{3,4}}.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles);

// Named families. Orders above the closure cap, or parameters outside the
// supported set, throw kUnsupportedParameter.
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup symmetric_group(std::size_t n);  // n <= 6
FiniteGroup alternating_group(std::size_t n);  // n <= 6
FiniteGroup sl2_group(std::uint32_t p);  // p in {3, 5, 7}
FiniteGroup psl2_group(std::uint32_t p);  // p in {5, 7, 11}
FiniteGroup quaternion_group();
FiniteGroup heisenberg_group(std::uint32_t p);  // p in {3, 5}
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses a family spec such as "alternating(5)", "psl2(7)", "quaternion8",
/// "product(cyclic(2),symmetric(3))" and builds the group.
FiniteGroup named_group(const std::string& spec);

// Group file: "quasirep-group v1", "name=<label>", "order=<n>", then n rows
// of n space-separated indices. The loader rejects any deviation and names
// the offending line.
void write_group(std::ostream& out, const FiniteGroup& g);
FiniteGroup read_group(std::istream& in);
void save_group(const FiniteGroup& g, const std::filesystem::path& path);
FiniteGroup load_group(const std::filesystem::path& path);

}  // namespace quasirep

#endif  // QUASIREP_GROUP_HPP
