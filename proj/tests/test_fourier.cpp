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

#include "doctest.h"
#include "quasirep/approx_rep.hpp"
#include "quasirep/error.hpp"
#include "quasirep/fourier.hpp"
#include "quasirep/random.hpp"
#include "support.hpp"

using namespace quasirep;
using quasirep::testing::table_for;

namespace {

ScalarFunction random_scalar(const IrrepTable& t, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const Matrix v = gaussian_matrix(rng, static_cast<Eigen::Index>(t.group().order()), 1);
  return {t.group_ptr(), std::vector<Complex>(v.data(), v.data() + v.size())};
}

}  // namespace

TEST_CASE("scalar round trip and Plancherel") {
  for (const char* spec : {"symmetric(3)", "quaternion8", "alternating(5)", "psl2(7)"}) {
    CAPTURE(spec);
    const IrrepTable& t = table_for(spec);
    const ScalarFunction f = random_scalar(t, 3);
    const ScalarSpectrum s = transform_scalar(f, t);
    const ScalarFunction back = invert_scalar(s, t);
    double sup = 0;
    for (std::size_t x = 0; x < f.values.size(); ++x) sup = std::max(sup, std::abs(back.values[x] - f.values[x]));
    CHECK(sup <= 1e-10);
    const PlancherelSides p = plancherel_check(f, s, t);
    CHECK(std::abs(p.lhs - p.rhs) <= 1e-8 * p.lhs);

    const ScalarFunction g = random_scalar(t, 4);
    const Complex a = inner_product(f, g);
    const Complex b = spectral_inner_product(s, transform_scalar(g, t), t);
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(a) + 1e-12);
  }
}

TEST_CASE("transform of the point mass at the identity") {
  const IrrepTable& t = table_for("alternating(5)");
  ScalarFunction delta{t.group_ptr(), std::vector<Complex>(60, 0.0)};
  delta.values[t.group().identity()] = 1.0;
  const ScalarSpectrum s = transform_scalar(delta, t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto d = static_cast<Eigen::Index>(t[i].dim());
    CHECK((s.blocks[i] - Matrix::Identity(d, d) / 60.0).norm() <= 1e-14);
  }
}

TEST_CASE("inversion needs a complete table") {
  const IrrepTable& t = table_for("symmetric(3)");
  const IrrepTable partial(t.group_ptr(), {t[0], t[1]});
  const ScalarFunction f = random_scalar(t, 1);
  const ScalarSpectrum s = transform_scalar(f, partial);
  try {
    invert_scalar(s, partial);
    FAIL("inverted over an incomplete table");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteTable);
  }
}

TEST_CASE("matrix transform of an irrep is the cupcap at its dual") {
  const IrrepTable& t = table_for("psl2(7)");
  for (std::size_t i = 1; i < t.size(); ++i) {
    const MatrixSpectrum s = transform_matrix(as_matrix_function(t[i]), t);
    const std::size_t j = t.dual(i);
    // the dual is only equivalent to the conjugate, so the block is the
    // cupcap up to a unitary change of basis: a rank-one projector
    const Matrix& b = s.blocks[j];
    CHECK((b * b - b).norm() <= 1e-10);
    CHECK((b - b.adjoint()).norm() <= 1e-10);
    CHECK(std::abs(b.trace() - 1.0) <= 1e-10);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (k != j) CHECK(s.blocks[k].norm() <= 1e-10);
  }
}

TEST_CASE("cupcap is a rank-one projector") {
  for (std::size_t d : {1, 2, 5}) {
    const Matrix c = cupcap(d);
    CHECK((c * c - c).norm() <= 1e-14);
    CHECK(std::abs(c.trace() - 1.0) <= 1e-14);
  }
}

TEST_CASE("matrix Plancherel") {
  const IrrepTable& t = table_for("alternating(5)");
  const MatrixFunction psi = random_admissible(t.group_ptr(), 3, 8);
  const MatrixSpectrum s = transform_matrix(psi, t);
  CHECK(matrix_plancherel_rhs(s, t) == doctest::Approx(psi.mean_square_frobenius()).epsilon(1e-10));
}
