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

#include "quasirep/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include <openssl/evp.h>

#include "quasirep/error.hpp"

namespace quasirep {

namespace {

std::string sha256_hex(std::size_t n, std::span<const Element> table) {
  std::vector<unsigned char> bytes;
  bytes.reserve(4 * (table.size() + 1));
  auto push = [&bytes](std::uint32_t v) {
    for (int k = 0; k < 4; ++k) bytes.push_back(static_cast<unsigned char>((v >> (8 * k)) & 0xff));
  };
  push(static_cast<std::uint32_t>(n));
  for (Element e : table) push(e);

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    fail(ErrorCode::kIoError, "SHA-256 digest failed");
  }
  EVP_MD_CTX_free(ctx);

  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string witness(const char* what, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << what << " (witness";
  for (auto i : idx) os << ' ' << i;
  os << ')';
  return os.str();
}

void check_latin_square(std::size_t n, std::span<const Element> table) {
  std::vector<std::size_t> seen(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t y = 0; y < n; ++y) {
      const Element v = table[x * n + y];
      if (v >= n) fail(ErrorCode::kNotAGroup, witness("table entry out of range at row, column", {x, y}));
      if (seen[v] != n) fail(ErrorCode::kNotAGroup, witness("row repeats a value at row, columns", {x, seen[v], y}));
      seen[v] = y;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t x = 0; x < n; ++x) {
      const Element v = table[x * n + y];
      if (seen[v] != n) fail(ErrorCode::kNotAGroup, witness("column repeats a value at column, rows", {y, seen[v], x}));
      seen[v] = x;
    }
  }
}

}  // namespace

std::vector<std::vector<Element>> conjugacy_classes(std::size_t n, std::span<const Element> table,
                                                    std::span<const Element> inverses,
                                                    Element identity) {
  std::vector<std::vector<Element>> classes;
  std::vector<bool> assigned(n, false);
  auto orbit = [&](Element x) {
    std::vector<Element> cls;
    for (std::size_t g = 0; g < n; ++g) {
      const Element c = table[table[g * n + x] * n + inverses[g]];
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    return cls;
  };
  classes.push_back(orbit(identity));
  for (Element x = 0; x < n; ++x)
    if (!assigned[x]) classes.push_back(orbit(x));
  return classes;
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Element> table, std::string name,
                                    const Tolerances& tol) {
  if (n == 0) fail(ErrorCode::kNotAGroup, "order must be positive");
  if (table.size() != n * n)
    fail(ErrorCode::kNotAGroup, "table has " + std::to_string(table.size()) + " entries, expected " +
                                    std::to_string(n * n));
  check_latin_square(n, table);

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.name_ = std::move(name);

  // In a Latin square an idempotent x (x*x = x) is a two-sided identity iff
  // its row and column are the identity permutation.
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    if (g.mul(e, e) != e) continue;
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) fail(ErrorCode::kNotAGroup, "no identity element");

  g.inverses_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    Element y = 0;
    while (y < n && g.mul(x, y) != g.identity_) ++y;
    if (y == n || g.mul(y, x) != g.identity_)
      fail(ErrorCode::kNotAGroup, witness("element has no two-sided inverse", {x}));
    g.inverses_[x] = y;
  }

  auto check_triple = [&g](Element x, Element y, Element z) {
    if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
      fail(ErrorCode::kNotAGroup, witness("associativity fails for triple", {x, y, z}));
  };
  if (n <= tol.associativity_exhaustive_max) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Element xy = g.mul(x, y);
        const Element* row_xy = &g.table_[xy * n];
        const Element* row_x = &g.table_[x * n];
        const Element* row_y = &g.table_[y * n];
        for (Element z = 0; z < n; ++z)
          if (row_xy[z] != row_x[row_y[z]]) check_triple(x, y, z);
      }
  } else {
    std::mt19937_64 rng(0x71a55ULL ^ n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t s = 0; s < tol.associativity_samples; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }

  g.classes_ = conjugacy_classes(n, g.table_, g.inverses_, g.identity_);
  g.class_of_.assign(n, 0);
  for (std::size_t c = 0; c < g.classes_.size(); ++c)
    for (Element x : g.classes_[c]) g.class_of_[x] = c;
  g.hash_ = sha256_hex(n, g.table_);
  return g;
}

Element FiniteGroup::power(Element x, int k) const noexcept {
  Element base = k < 0 ? inverses_[x] : x;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  Element result = identity_;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::size_t> FiniteGroup::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes_.size());
  for (const auto& c : classes_) sizes.push_back(c.size());
  return sizes;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const auto a = cyc[k];
      if (a >= degree || used[a]) fail(ErrorCode::kInvalidArgument, "bad cycle notation");
      used[a] = true;
      p[a] = cyc[(k + 1) % cyc.size()];
    }
  }
  return p;
}

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                        std::string name, std::size_t cap) {
  if (degree == 0) fail(ErrorCode::kInvalidArgument, "permutation degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != degree) fail(ErrorCode::kInvalidArgument, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) fail(ErrorCode::kInvalidArgument, "generator is not a permutation");
      hit[v] = true;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  // right[k][x] = index of elements[x] * gens[k]
  std::vector<std::vector<Element>> right(gens.size());
  std::vector<Element> parent{0};
  std::vector<std::size_t> parent_gen{0};

  Permutation prod(degree);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Permutation& p = elements[head];
      for (std::size_t i = 0; i < degree; ++i) prod[i] = p[gens[k][i]];
      auto [it, inserted] = index.try_emplace(prod, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap)
          fail(ErrorCode::kClosureCapExceeded,
               "closure exceeds " + std::to_string(cap) + " elements");
        elements.push_back(prod);
        parent.push_back(static_cast<Element>(head));
        parent_gen.push_back(k);
      }
      right[k].resize(elements.size());
      right[k][head] = it->second;
    }
  }

  // Row x of the table by walking the BFS tree: x*y = (x*parent(y))*gen.
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    Element* row = &table[x * n];
    row[0] = x;
    for (Element y = 1; y < n; ++y) row[y] = right[parent_gen[y]][row[parent[y]]];
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(name));
}

}  // namespace quasirep
