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

#include <algorithm>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "quasirep/error.hpp"
#include "quasirep/group.hpp"
#include "support.hpp"

using namespace quasirep;
using quasirep::testing::group_for;

namespace {

// Class sizes by brute force: |G| / |centralizer(x)| for one x per orbit.
std::vector<std::size_t> brute_class_sizes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> sizes;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::size_t orbit = 0;
    for (Element y = 0; y < n; ++y) {
      const Element c = g.mul(g.mul(y, x), g.inverse(y));
      if (!seen[c]) {
        seen[c] = true;
        ++orbit;
      }
    }
    sizes.push_back(orbit);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("named family orders") {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"cyclic(1)", 1},        {"cyclic(12)", 12},   {"symmetric(3)", 6},   {"symmetric(5)", 120},
      {"symmetric(6)", 720},   {"dihedral(4)", 8},   {"quaternion8", 8},    {"alternating(5)", 60},
      {"alternating(6)", 360}, {"sl2(3)", 24},       {"sl2(5)", 120},       {"sl2(7)", 336},
      {"psl2(5)", 60},         {"psl2(7)", 168},     {"psl2(11)", 660},     {"heisenberg(3)", 27},
      {"heisenberg(5)", 125},  {"product(cyclic(2),symmetric(3))", 12}};
  for (const auto& [spec, order] : cases) {
    CAPTURE(spec);
    CHECK(group_for(spec)->order() == order);
  }
}

TEST_CASE("class sizes match brute-force orbits") {
  CHECK(sorted(group_for("alternating(5)")->class_sizes()) == std::vector<std::size_t>{1, 12, 12, 15, 20});
  CHECK(sorted(group_for("symmetric(3)")->class_sizes()) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sorted(group_for("quaternion8")->class_sizes()) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sorted(group_for("psl2(7)")->class_sizes()) == std::vector<std::size_t>{1, 21, 24, 24, 42, 56});
  CHECK(group_for("alternating(6)")->class_count() == 7);
  CHECK(group_for("symmetric(4)")->class_count() == 5);
  for (const char* spec : {"dihedral(5)", "sl2(5)", "heisenberg(3)", "alternating(6)", "psl2(11)"}) {
    CAPTURE(spec);
    const auto g = group_for(spec);
    CHECK(sorted(g->class_sizes()) == brute_class_sizes(*g));
  }
}

TEST_CASE("identity class first and classes partition the group") {
  const auto g = group_for("psl2(7)");
  CHECK(g->classes().front() == std::vector<Element>{g->identity()});
  std::vector<int> hits(g->order(), 0);
  for (const auto& c : g->classes())
    for (Element x : c) ++hits[x];
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("axioms hold on named groups") {
  for (const char* spec : {"dihedral(6)", "quaternion8", "heisenberg(3)", "sl2(3)"}) {
    const auto g = group_for(spec);
    for (Element x = 0; x < g->order(); ++x) {
      CHECK(g->mul(x, g->inverse(x)) == g->identity());
      CHECK(g->power(x, static_cast<int>(g->order())) == g->identity());
      CHECK(g->power(x, -1) == g->inverse(x));
    }
  }
  CHECK(group_for("cyclic(7)")->is_abelian());
  CHECK(group_for("heisenberg(3)")->is_abelian() == false);
  CHECK(group_for("quaternion8")->is_abelian() == false);
}

TEST_CASE("quaternion relations") {
  const auto g = group_for("quaternion8");
  // exactly one involution (-1), six elements of order 4
  int involutions = 0, order4 = 0;
  for (Element x = 0; x < 8; ++x) {
    if (x == g->identity()) continue;
    if (g->mul(x, x) == g->identity()) ++involutions;
    else if (g->power(x, 4) == g->identity()) ++order4;
  }
  CHECK(involutions == 1);
  CHECK(order4 == 6);
}

TEST_CASE("permutation composition is function composition") {
  const Permutation a = permutation_from_cycles(3, {{0, 1}});
  const Permutation b = permutation_from_cycles(3, {{1, 2}});
  const FiniteGroup g = from_permutation_generators(3, {a, b}, "S3");
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("table validation names a witness") {
  SUBCASE("non-associative loop of order 5") {
    std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    try {
      FiniteGroup::from_table(5, t);
      FAIL("accepted a non-associative table");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotAGroup);
      CHECK(std::string(e.what()).find("witness") != std::string::npos);
    }
  }
  SUBCASE("repeated entry in a row") {
    std::vector<Element> t{0, 1, 0, 0};
    CHECK(code_of([&] { FiniteGroup::from_table(2, t); }) == ErrorCode::kNotAGroup);
  }
  SUBCASE("wrong size") {
    CHECK(code_of([] { FiniteGroup::from_table(2, {0, 1, 1}); }) == ErrorCode::kNotAGroup);
  }
  SUBCASE("out of range entry") {
    CHECK(code_of([] { FiniteGroup::from_table(2, {0, 1, 1, 2}); }) == ErrorCode::kNotAGroup);
  }
}

TEST_CASE("caps and unsupported parameters") {
  const Permutation s = permutation_from_cycles(5, {{0, 1}});
  const Permutation c = permutation_from_cycles(5, {{0, 1, 2, 3, 4}});
  CHECK(code_of([&] { from_permutation_generators(5, {s, c}, "S5", 100); }) == ErrorCode::kClosureCapExceeded);
  CHECK(code_of([] { named_group("symmetric(7)"); }) == ErrorCode::kUnsupportedParameter);
  CHECK(code_of([] { named_group("psl2(13)"); }) == ErrorCode::kUnsupportedParameter);
  CHECK(code_of([] { named_group("cyclic(0)"); }) == ErrorCode::kUnsupportedParameter);
  CHECK(code_of([] { named_group("nosuch(3)"); }) == ErrorCode::kUnsupportedParameter);
}

TEST_CASE("spec parser") {
  CHECK(named_group("product(cyclic(2),alternating(4))").order() == 24);
  CHECK(named_group(" alternating( 5 ) ").order() == 60);
  CHECK(named_group("quaternion").order() == 8);
  for (const char* bad : {"alternating(", "cyclic(3)x", "product(cyclic(2))", "cyclic(-1)", ""}) {
    CAPTURE(bad);
    CHECK(code_of([&] { named_group(bad); }) == ErrorCode::kParseError);
  }
}

TEST_CASE("hash is a stable function of the table") {
  const auto a = named_group("alternating(5)");
  const auto b = named_group("alternating(5)");
  CHECK(a.hash() == b.hash());
  CHECK(a.hash().size() == 64);
  CHECK(a.hash() != named_group("psl2(5)").hash());
}

TEST_CASE("group file round trip and rejection") {
  const auto g = named_group("dihedral(3)");
  std::stringstream s;
  write_group(s, g);
  const FiniteGroup back = read_group(s);
  CHECK(back.hash() == g.hash());
  CHECK(back.name() == g.name());

  auto reject = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_group(in);
      FAIL("accepted a malformed file");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  reject("quasirep-group v2\nname=x\norder=1\n0\n", "line 1");
  reject("quasirep-group v1\nname=x\norder=two\n", "line 3");
  reject("quasirep-group v1\nname=x\norder=2\n0 1\n1\n", "line 5");
  reject("quasirep-group v1\nname=x\norder=2\n0 1\n1 0\nextra\n", "line 6");
  reject("quasirep-group v1\nname=x\norder=2\n0  1\n1 0\n", "line 4");

  std::istringstream not_group("quasirep-group v1\nname=x\norder=2\n0 1\n0 1\n");
  CHECK(code_of([&] { read_group(not_group); }) == ErrorCode::kNotAGroup);
}
