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

#include <cmath>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "quasirep/approx_hom.hpp"
#include "quasirep/approx_rep.hpp"
#include "quasirep/error.hpp"
#include "support.hpp"

using namespace quasirep;
using quasirep::testing::group_for;
using quasirep::testing::table_for;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

// Independent of the library loops: counts on the raw table spans.
double brute_agreement(const GroupMap& f) {
  const std::size_t n = f.source->order();
  const auto gt = f.source->table();
  const auto ht = f.target->table();
  const std::size_t m = f.target->order();
  std::size_t hits = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hits += f.values[gt[x * n + y]] == ht[f.values[x] * m + f.values[y]];
  return static_cast<double>(hits) / static_cast<double>(n * n);
}

}  // namespace

TEST_CASE("identity map is a homomorphism") {
  const GroupPtr a5 = group_for("alternating(5)");
  const GroupMap f = identity_map(a5, a5);
  const HomReport r = evaluate(f, table_for("alternating(5)"), table_for("alternating(5)"));
  CHECK(r.agreement_prob == 1.0);
  CHECK(r.epsilon == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(r.thm2_bound - 1) <= 1e-12);
  CHECK(r.collision_prob == doctest::Approx(1.0 / 60));
  CHECK(code_of([&] { identity_map(a5, group_for("symmetric(3)")); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("constant map to the identity is a homomorphism") {
  const GroupPtr g = group_for("alternating(6)");
  const GroupPtr h = group_for("symmetric(3)");
  const GroupMap f(g, h, std::vector<Element>(g->order(), h->identity()));
  CHECK(f.epsilon == doctest::Approx(5.0));
  const HomReport r = evaluate(f, table_for("alternating(6)"), table_for("symmetric(3)"));
  CHECK(r.agreement_prob == 1.0);
  CHECK(r.thm2_bound == 1.0);
  CHECK(r.thm3_bound == 1.0);
}

TEST_CASE("random maps from A6 to S3") {
  const GroupPtr g = group_for("alternating(6)");
  const GroupPtr h = group_for("symmetric(3)");
  for (std::uint64_t s = 0; s < 10; ++s) {
    const GroupMap f = random_map(g, h, s);
    const HomReport r = evaluate(f, table_for("alternating(6)"), table_for("symmetric(3)"));
    CHECK(std::abs(r.agreement_prob - 1.0 / 6) <= 0.02);
    CHECK(r.agreement_prob == brute_agreement(f));
    CHECK(r.agreement_prob <= r.thm2_bound + 1e-12);
    CHECK(r.agreement_prob <= r.thm3_bound + 1e-12);
    CHECK(r.d_min == 5);
  }
}

TEST_CASE("R_H values") {
  const IrrepTable& s3 = table_for("symmetric(3)");
  CHECK(r_h(s3, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r_h(s3, 3) == doctest::Approx((2 * std::sqrt(1.0 / 3) + 4 * std::sqrt(2.0 / 3)) / 6).epsilon(1e-12));
  CHECK(std::abs(r_h(s3, 3) - 0.73678) <= 1e-5);
  CHECK(r_h(table_for("cyclic(2)"), 4) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r_h(s3, 0) == 0.0);
  CHECK(thm2_term(0, 1, 1) == doctest::Approx(1.0));
  CHECK(thm2_term(4, 1, 4) == doctest::Approx(0.5 * (1 + 2 + 0.5)));
}

TEST_CASE("lift through an irrep") {
  const GroupPtr z4 = group_for("cyclic(4)");
  const GroupPtr z2 = group_for("cyclic(2)");
  const GroupMap f = genuine_hom(z4, z2, {{1, 1}});
  for (Element x = 0; x < 4; ++x) CHECK(f(x) == x % 2);
  const IrrepTable& t2 = table_for("cyclic(2)");
  const MatrixFunction psi = lift_through_irrep(f, t2[1]);
  for (Element x = 0; x < 4; ++x) CHECK(psi(x)(0, 0).real() == doctest::Approx(x % 2 ? -1.0 : 1.0));
  CHECK(defect_direct(psi, 1).defect <= 1e-24);
}

TEST_CASE("genuine homomorphisms from generator images") {
  const GroupPtr z6 = group_for("cyclic(6)");
  const GroupPtr z3 = group_for("cyclic(3)");
  const GroupMap f = genuine_hom(z6, z3, {{1, 1}});
  for (Element x = 0; x < 6; ++x) CHECK(f(x) == x % 3);
  CHECK(brute_agreement(f) == 1.0);
  CHECK(f.epsilon == doctest::Approx(0.0).epsilon(1e-14));
  const HomReport r = evaluate(f, table_for("cyclic(6)"), table_for("cyclic(3)"));
  CHECK(r.agreement_prob == 1.0);

  // 1 has order 6 but its image 1 in Z4 has order 4
  CHECK(code_of([] { genuine_hom(group_for("cyclic(6)"), group_for("cyclic(4)"), {{1, 1}}); }) ==
        ErrorCode::kNotAHomomorphism);
  // 2 generates only the even subgroup
  CHECK(code_of([] { genuine_hom(group_for("cyclic(6)"), group_for("cyclic(3)"), {{2, 1}}); }) ==
        ErrorCode::kNotAHomomorphism);
}

TEST_CASE("balanced maps have zero epsilon") {
  const GroupPtr g = group_for("alternating(5)");
  const GroupPtr h = group_for("symmetric(3)");
  const GroupMap f = balanced_random_map(g, h, 3);
  CHECK(std::abs(f.epsilon) <= 1e-14);
  for (double p : f.p_f) CHECK(p == doctest::Approx(1.0 / 6));
  const HomReport r = evaluate(f, table_for("alternating(5)"), table_for("symmetric(3)"));
  CHECK(r.thm3_bound == doctest::Approx(1.0 / 6 + r_h(table_for("symmetric(3)"), 3)));
}

TEST_CASE("perturbed homomorphisms") {
  const GroupPtr z8 = group_for("cyclic(8)");
  const GroupPtr z4 = group_for("cyclic(4)");
  const GroupMap base = genuine_hom(z8, z4, {{1, 1}});
  const GroupMap f = perturbed_hom(base, 0.25, 5);
  std::size_t changed = 0;
  for (Element x = 0; x < 8; ++x) changed += f(x) != base(x);
  CHECK(changed == 2);
  CHECK(agreement_probability(f) == brute_agreement(f));
  CHECK(agreement_probability(f) < 1.0);
  CHECK(perturbed_hom(base, 0.0, 5).values == base.values);
}

TEST_CASE("collision identities") {
  const GroupPtr g = group_for("alternating(5)");
  const GroupPtr h = group_for("dihedral(4)");
  for (std::uint64_t s = 0; s < 5; ++s) {
    const GroupMap f = random_map(g, h, s);
    double sq = 0;
    for (double p : f.p_f) sq += p * p;
    CHECK(collision_probability(f) == doctest::Approx(sq).epsilon(1e-12));
    CHECK(f.epsilon == doctest::Approx(8 * (sq - 1.0 / 8)).epsilon(1e-12));
    CHECK(regular_collision_gap(f) == doctest::Approx(collision_probability(f) - 1.0 / 8).epsilon(1e-10));
  }
}

TEST_CASE("thm2 minimizer never exceeds the rep-side ceiling of a lift") {
  const GroupPtr g = group_for("alternating(5)");
  const GroupPtr h = group_for("symmetric(3)");
  const IrrepTable& tg = table_for("alternating(5)");
  const IrrepTable& th = table_for("symmetric(3)");
  for (std::uint64_t s = 0; s < 5; ++s) {
    const GroupMap f = random_map(g, h, s);
    const HomReport r = evaluate(f, tg, th);
    REQUIRE(r.thm2_sigma.has_value());
    const UnitaryRep& sigma = th[*r.thm2_sigma];
    CHECK(r.thm2_bound <= thm2_term(r.epsilon, sigma.dim(), tg.d_min()) + 1e-15);
    for (std::size_t i = 1; i < th.size(); ++i)
      CHECK(r.thm2_bound <= std::min(1.0, thm2_term(r.epsilon, th[i].dim(), tg.d_min())) + 1e-15);
  }
}

TEST_CASE("map file round trip") {
  const GroupPtr g = group_for("alternating(5)");
  const GroupPtr h = group_for("symmetric(3)");
  const GroupMap f = random_map(g, h, 1);
  std::stringstream ss;
  write_map(ss, f);
  const GroupMap back = read_map(ss, g, h);
  CHECK(back.values == f.values);

  std::stringstream wrong;
  write_map(wrong, f);
  CHECK(code_of([&] { read_map(wrong, h, g); }) == ErrorCode::kParseError);

  std::string text;
  {
    std::stringstream s2;
    write_map(s2, f);
    text = s2.str();
  }
  text.replace(text.rfind('\n', text.size() - 2) + 1, 1, "9");
  std::stringstream bad(text);
  const ErrorCode c = code_of([&] { read_map(bad, g, h); });
  CHECK((c == ErrorCode::kParseError || c == ErrorCode::kInvalidArgument));
}
