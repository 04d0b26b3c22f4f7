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

#include <array>
#include <cctype>
#include <map>
#include <string>

#include "quasirep/error.hpp"
#include "quasirep/group.hpp"

namespace quasirep {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::kUnsupportedParameter, what);
}

void require_order(std::size_t order) {
  require(order <= default_tolerances().closure_cap,
          "group order " + std::to_string(order) + " exceeds the cap of " +
              std::to_string(default_tolerances().closure_cap));
}

// 2x2 matrices over F_p stored as (a, b, c, d) = [[a, b], [c, d]].
using Mat2 = std::array<std::uint32_t, 4>;

Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint32_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

Mat2 canonical_pm(const Mat2& m, std::uint32_t p) {
  for (auto v : m) {
    if (v == 0) continue;
    if (v <= (p - 1) / 2) return m;
    return {(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p, (p - m[3]) % p};
  }
  return m;
}

// Materializes a 2x2 matrix group as the left-multiplication action on its
// own element list, then defers to the permutation closure.
FiniteGroup matrix_group(std::uint32_t p, bool projective, std::string name) {
  std::vector<Mat2> elements;
  std::map<Mat2, std::uint32_t> index;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          if ((a * d + p * p - (b * c) % p) % p != 1) continue;
          Mat2 m{a, b, c, d};
          if (projective && canonical_pm(m, p) != m) continue;
          index.emplace(m, static_cast<std::uint32_t>(elements.size()));
          elements.push_back(m);
        }

  const std::array<Mat2, 2> gens{Mat2{0, p - 1, 1, 0}, Mat2{1, 1, 0, 1}};
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    Permutation perm(elements.size());
    for (std::size_t j = 0; j < elements.size(); ++j) {
      Mat2 prod = mat_mul(g, elements[j], p);
      if (projective) prod = canonical_pm(prod, p);
      perm[j] = index.at(prod);
    }
    perms.push_back(std::move(perm));
  }
  return from_permutation_generators(elements.size(), perms, std::move(name));
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  require(n >= 1, "cyclic(n) needs n >= 1");
  require_order(n);
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>((x + y) % n);
  return FiniteGroup::from_table(n, std::move(t), "Z" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  require(n >= 1, "dihedral(n) needs n >= 1");
  require_order(2 * n);
  // index k + n*e stands for r^k s^e; (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
      const std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
      t[x * order + y] = static_cast<Element>(k + n * ((e + f) % 2));
    }
  return FiniteGroup::from_table(order, std::move(t), "D" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t n) {
  require(n >= 1 && n <= 6, "symmetric(n) supports 1 <= n <= 6");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(permutation_from_cycles(n, {{0, 1}}));
    std::vector<std::uint32_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint32_t>(i);
    gens.push_back(permutation_from_cycles(n, {full}));
  }
  return from_permutation_generators(n, gens, "S" + std::to_string(n));
}

FiniteGroup alternating_group(std::size_t n) {
  require(n >= 1 && n <= 6, "alternating(n) supports 1 <= n <= 6");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(permutation_from_cycles(n, {{0, 1, k}}));
  return from_permutation_generators(n, gens, "A" + std::to_string(n));
}

FiniteGroup sl2_group(std::uint32_t p) {
  require(p == 3 || p == 5 || p == 7, "sl2(p) supports p in {3, 5, 7}");
  return matrix_group(p, false, "SL(2," + std::to_string(p) + ")");
}

FiniteGroup psl2_group(std::uint32_t p) {
  require(p == 5 || p == 7 || p == 11, "psl2(p) supports p in {5, 7, 11}");
  return matrix_group(p, true, "PSL(2," + std::to_string(p) + ")");
}

FiniteGroup quaternion_group() {
  // index 4*s + u for (-1)^s * unit[u], units 1, i, j, k
  static constexpr int kUnitProduct[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int s = (x / 4 + y / 4 + kSign[u][v]) % 2;
      t[x * 8 + y] = static_cast<Element>(4 * s + kUnitProduct[u][v]);
    }
  return FiniteGroup::from_table(8, std::move(t), "Q8");
}

FiniteGroup heisenberg_group(std::uint32_t p) {
  require(p == 3 || p == 5, "heisenberg(p) supports p in {3, 5}");
  // (a, b, c) at index a p^2 + b p + c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
  const std::size_t n = static_cast<std::size_t>(p) * p * p;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      t[x * n + y] = static_cast<Element>(((a + a2) % p) * p * p + ((b + b2) % p) * p +
                                          (c + c2 + a * b2) % p);
    }
  return FiniteGroup::from_table(n, std::move(t), "Heis(" + std::to_string(p) + ")");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  require_order(n);
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      t[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  return FiniteGroup::from_table(n, std::move(t), a.name() + "x" + b.name());
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  FiniteGroup parse_all() {
    FiniteGroup g = parse_group();
    skip_ws();
    if (pos_ != s_.size()) error("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParseError,
         "group spec '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) error("expected a family name");
    return s_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) error("expected an integer");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  std::size_t single_int() {
    expect('(');
    const std::size_t v = integer();
    expect(')');
    return v;
  }

  FiniteGroup parse_group() {
    const std::string name = ident();
    if (name == "cyclic") return cyclic_group(single_int());
    if (name == "dihedral") return dihedral_group(single_int());
    if (name == "symmetric") return symmetric_group(single_int());
    if (name == "alternating") return alternating_group(single_int());
    if (name == "sl2") return sl2_group(static_cast<std::uint32_t>(single_int()));
    if (name == "psl2") return psl2_group(static_cast<std::uint32_t>(single_int()));
    if (name == "heisenberg") return heisenberg_group(static_cast<std::uint32_t>(single_int()));
    if (name == "quaternion8" || name == "quaternion") {
      if (accept('(')) expect(')');
      return quaternion_group();
    }
    if (name == "product") {
      expect('(');
      FiniteGroup a = parse_group();
      expect(',');
      FiniteGroup b = parse_group();
      expect(')');
      return direct_product(a, b);
    }
    fail(ErrorCode::kUnsupportedParameter, "unknown group family '" + name + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup named_group(const std::string& spec) { return SpecParser(spec).parse_all(); }

}  // namespace quasirep
