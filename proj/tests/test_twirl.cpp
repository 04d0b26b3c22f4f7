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
#include <numeric>

#include "doctest.h"
#include "quasirep/error.hpp"
#include "quasirep/random.hpp"
#include "quasirep/twirl.hpp"
#include "support.hpp"

using namespace quasirep;
using quasirep::testing::irrep_of_dim;
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

// Fillings of the Young diagram lambda with entries in [1, d], rows weakly
// increasing and columns strictly increasing.
std::uint64_t brute_tableaux(const std::vector<int>& lambda, int d) {
  std::vector<std::pair<int, int>> cells;
  for (int row = 0; row < static_cast<int>(lambda.size()); ++row)
    for (int col = 0; col < lambda[row]; ++col) cells.emplace_back(row, col);
  const int n = static_cast<int>(cells.size());
  std::vector<int> fill(n, 1);
  std::uint64_t count = 0;
  auto at = [&](int row, int col) {
    for (int k = 0; k < n; ++k)
      if (cells[k] == std::pair{row, col}) return fill[k];
    return 0;
  };
  while (true) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      const auto [row, col] = cells[k];
      if (col > 0 && at(row, col - 1) > fill[k]) ok = false;
      if (row > 0 && at(row - 1, col) >= fill[k]) ok = false;
    }
    count += ok;
    int k = 0;
    while (k < n && fill[k] == d) fill[k++] = 1;
    if (k == n) break;
    ++fill[k];
  }
  return count;
}

// Reference coefficients from the full 24 x 24 system
// sum_pi upsilon(pi) d_rho^{c(pi sigma^{-1})} = d_psi^{c(sigma)}.
std::array<double, kS4Classes> gram_oracle(std::size_t d_rho, std::size_t d_psi) {
  const S4Data& s4 = S4Data::get();
  Eigen::MatrixXd g(24, 24);
  Eigen::VectorXd b(24);
  for (std::size_t s = 0; s < 24; ++s) {
    b(s) = std::pow(double(d_psi), cycle_count(s4.elements[s]));
    for (std::size_t p = 0; p < 24; ++p)
      g(s, p) = std::pow(double(d_rho), cycle_count(compose(s4.elements[p], inverse(s4.elements[s]))));
  }
  const Eigen::VectorXd u = g.fullPivLu().solve(b);
  std::array<double, kS4Classes> out{};
  for (std::size_t p = 0; p < 24; ++p) out[s4.class_of[p]] = u(p);
  return out;
}

}  // namespace

TEST_CASE("S4 data") {
  const S4Data& s4 = S4Data::get();
  CHECK(std::accumulate(s4.class_sizes.begin(), s4.class_sizes.end(), std::size_t{0}) == 24);
  CHECK(s4.class_sizes == std::array<std::size_t, 5>{1, 6, 8, 3, 6});
  CHECK(s4.cycles == std::array<int, 5>{4, 3, 2, 2, 1});
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      int s = 0;
      for (std::size_t c = 0; c < 5; ++c) s += int(s4.class_sizes[c]) * s4.characters[a][c] * s4.characters[b][c];
      CHECK(s == (a == b ? 24 : 0));
    }
  for (std::size_t k = 0; k < 24; ++k) {
    const Perm4& p = s4.elements[k];
    CHECK(s4_class(p) == s4.class_of[k]);
    CHECK(compose(p, inverse(p)) == Perm4{0, 1, 2, 3});
    CHECK(transposition_distance(p) == 4 - cycle_count(p));
  }
  CHECK(s4_class_name(4) == "(1234)");
}

TEST_CASE("tableau counts") {
  const S4Data& s4 = S4Data::get();
  for (const auto& lambda : s4.partitions)
    for (int d = 1; d <= 6; ++d) CHECK(tableau_count(lambda, d) == brute_tableaux(lambda, d));
  CHECK(tableau_count({4}, 2) == 5);
  CHECK(tableau_count({2, 2}, 2) == 1);
  CHECK(tableau_count({1, 1, 1, 1}, 4) == 1);
  CHECK(tableau_count({1, 1, 1, 1}, 3) == 0);
}

TEST_CASE("moment trace matches a dense contraction") {
  const S4Data& s4 = S4Data::get();
  Rng rng = make_rng(3);
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t k = 1; k <= d; ++k) {
      const Matrix w = haar_unitary(rng, Eigen::Index(d)).leftCols(Eigen::Index(k));
      const Matrix p = w * w.adjoint();
      for (const Perm4& sigma : s4.representatives) {
        Complex tr = 0;
        std::array<std::size_t, 4> i{};
        for (i[0] = 0; i[0] < d; ++i[0])
          for (i[1] = 0; i[1] < d; ++i[1])
            for (i[2] = 0; i[2] < d; ++i[2])
              for (i[3] = 0; i[3] < d; ++i[3]) {
                Complex term = 1;
                for (int q = 0; q < 4; ++q) term *= p(Eigen::Index(i[q]), Eigen::Index(i[sigma[q]]));
                tr += term;
              }
        CHECK(std::abs(tr - double(moment_trace(sigma, k))) <= 1e-9);
      }
    }
}

TEST_CASE("exact coefficients: frozen rational oracles") {
  struct Case {
    std::size_t d_rho, d_psi;
    std::array<double, 5> v;
  };
  const Case cases[] = {
      {12, 6, {3083.0 / 51480, 67.0 / 12870, 1.0 / 102960, 23.0 / 51480, -1.0 / 25740}},
      {6, 3, {131.0 / 2520, 13.0 / 1260, 1.0 / 5040, 1.0 / 504, -1.0 / 2520}},
      {8, 4, {523.0 / 9240, 3.0 / 385, 1.0 / 18480, 29.0 / 27720, -1.0 / 6930}},
      {10, 5, {1411.0 / 24024, 25.0 / 4004, 1.0 / 48048, 47.0 / 72072, -5.0 / 72072}},
      {5, 2, {143.0 / 8400, 11.0 / 1680, 11.0 / 8400, 23.0 / 8400, -1.0 / 1680}},
  };
  for (const auto& c : cases) {
    const TwirlExpansion t = twirl_exact(c.d_rho, c.d_psi);
    const auto oracle = gram_oracle(c.d_rho, c.d_psi);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(std::abs(t.coefficients[k] - c.v[k]) <= 1e-14);
      CHECK(std::abs(oracle[k] - c.v[k]) <= 1e-10);
    }
  }
}

TEST_CASE("exact coefficients against the dense Gram solve") {
  for (std::size_t d = 4; d <= 14; ++d)
    for (std::size_t k = 1; k <= d; k += 2) {
      const TwirlExpansion t = twirl_exact(d, k);
      const auto oracle = gram_oracle(d, k);
      for (std::size_t c = 0; c < 5; ++c) CHECK(std::abs(t.coefficients[c] - oracle[c]) <= 1e-10);
    }
}

TEST_CASE("contraction identities") {
  const S4Data& s4 = S4Data::get();
  for (std::size_t d : {4, 7, 12})
    for (std::size_t k = 1; k <= d; ++k) {
      const TwirlExpansion t = twirl_exact(d, k);
      for (const Perm4& sigma : s4.representatives)
        CHECK(twirl_contraction(t, sigma) == doctest::Approx(std::pow(double(k), cycle_count(sigma))).epsilon(1e-10));
      double s = 0;
      for (std::size_t c = 0; c < 5; ++c)
        s += double(s4.class_sizes[c]) * t.coefficients[c] * std::pow(double(d), s4.cycles[c]);
      CHECK(s == doctest::Approx(std::pow(double(k), 4)).epsilon(1e-10));
    }
  const Eigen::MatrixXd g = collapsed_gram(6);
  CHECK(g.rows() == 5);
  CHECK(g(0, 0) == doctest::Approx(1296.0));
}

TEST_CASE("twirl argument checks") {
  CHECK(code_of([] { twirl_exact(3, 1); }) == ErrorCode::kDegenerateDimension);
  CHECK(code_of([] { twirl_exact(6, 0); }) == ErrorCode::kDimensionError);
  CHECK(code_of([] { twirl_exact(6, 7); }) == ErrorCode::kDimensionError);
  CHECK(code_of([] { twirl_monte_carlo(3, 1, 10, 0); }) == ErrorCode::kDegenerateDimension);
  CHECK(code_of([] { twirl_monte_carlo(15, 1, 10, 0); }) == ErrorCode::kDimensionError);
  CHECK(code_of([] { twirl_monte_carlo(6, 3, 1, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("trivial twirl") {
  const TwirlExpansion t = twirl_exact(6, 6);
  CHECK(std::abs(t.coefficients[0] - 1) <= 1e-12);
  for (std::size_t c = 1; c < 5; ++c) CHECK(std::abs(t.coefficients[c]) <= 1e-12);
}

TEST_CASE("Monte Carlo agrees with the exact coefficients") {
  const S4Data& s4 = S4Data::get();
  const TwirlExpansion ex = twirl_exact(6, 3);
  const TwirlMonteCarlo mc = twirl_monte_carlo(6, 3, 20000, 17);
  for (std::size_t c = 0; c < 5; ++c) {
    CHECK(mc.standard_errors[c] > 0);
    CHECK(std::abs(mc.expansion.coefficients[c] - ex.coefficients[c]) <= 3 * mc.standard_errors[c]);
    CHECK(std::abs(mc.gram_coefficients[c] - ex.coefficients[c]) <= 1e-9);
  }
  CHECK(mc.gram_condition < 1e10);
  // the estimate is a class function up to noise
  for (std::size_t k = 0; k < 24; ++k) {
    const std::size_t c = s4.class_of[k];
    const double se = std::hypot(mc.raw_stderr[k], mc.standard_errors[c]);
    CHECK(std::abs(mc.raw[k] - mc.expansion.coefficients[c]) <= 3 * se);
  }
  const TwirlMonteCarlo small = twirl_monte_carlo(6, 3, 5000, 17);
  for (std::size_t c = 0; c < 5; ++c) {
    const double ratio = small.standard_errors[c] / mc.standard_errors[c];
    CHECK(ratio >= std::sqrt(2.0));
    CHECK(ratio <= 2 * std::sqrt(2.0));
  }
  const TwirlMonteCarlo again = twirl_monte_carlo(6, 3, 5000, 17);
  CHECK(again.expansion.coefficients == small.expansion.coefficients);
}

TEST_CASE("leading asymptotics") {
  for (std::size_t d : {8, 10, 12, 14}) {
    const double r = 0.5, dd = double(d);
    const TwirlExpansion t = twirl_exact(d, d / 2);
    CHECK(std::abs(t.coefficients[0] - std::pow(r, 4)) <= 1 / (dd * dd));
    CHECK(std::abs(t.coefficients[1] - r * r * r * (1 - r) / dd) * dd * dd * dd <= 1);
  }
}

TEST_CASE("d^t scaling is stable away from the (123) class") {
  const S4Data& s4 = S4Data::get();
  for (std::size_t c : {0, 1, 3, 4}) {
    double lo = INFINITY, hi = 0;
    for (std::size_t d : {8, 10, 12}) {
      const double v = std::abs(twirl_exact(d, d / 2).coefficients[c]) *
                       std::pow(double(d), transposition_distance(s4.representatives[c]));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi / lo <= 2);
  }
}

TEST_CASE("error term audit") {
  const IrrepTable& a5 = table_for("alternating(5)");
  const UnitaryRep& rho = irrep_of_dim(a5, 5);
  const ErrorTermAudit full = error_term_audit(rho, 5, 20, 1);
  CHECK(full.monte_carlo == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(full.expansion == doctest::Approx(5.0).epsilon(1e-10));

  const ErrorTermAudit a = error_term_audit(rho, 3, 4000, 2);
  CHECK(std::abs(a.monte_carlo - a.expansion) <= 3 * a.monte_carlo_stderr);
  CHECK(std::abs(a.expansion - a.leading) <= 0.25 * a.leading);
  CHECK(a.second_moment == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(a.expansion == doctest::Approx(error_term_expansion(rho, twirl_exact(5, 3))).epsilon(1e-12));
}
