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
#include <cmath>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "quasirep/error.hpp"
#include "quasirep/random.hpp"
#include "quasirep/repr.hpp"
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

}  // namespace

TEST_CASE("irrep dimensions") {
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> cases{
      {"cyclic(1)", {1}},
      {"cyclic(2)", {1, 1}},
      {"symmetric(3)", {1, 1, 2}},
      {"dihedral(4)", {1, 1, 1, 1, 2}},
      {"quaternion8", {1, 1, 1, 1, 2}},
      {"alternating(5)", {1, 3, 3, 4, 5}},
      {"alternating(6)", {1, 5, 5, 8, 8, 9, 10}},
      {"psl2(7)", {1, 3, 3, 6, 7, 8}},
      {"sl2(3)", {1, 1, 1, 2, 2, 2, 3}},
      {"heisenberg(3)", {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}},
  };
  for (const auto& [spec, dims] : cases) {
    CAPTURE(spec);
    const IrrepTable& t = table_for(spec);
    CHECK(t.dims() == dims);
    CHECK(t.is_complete());
  }
  CHECK(table_for("cyclic(1)").d_min() == 0);
  CHECK(table_for("alternating(5)").d_min() == 3);
  CHECK(table_for("alternating(6)").d_min() == 5);
  CHECK(table_for("psl2(7)").d_min() == 3);
}

TEST_CASE("representation axioms and orthogonality") {
  for (const char* spec : {"symmetric(3)", "quaternion8", "alternating(5)", "psl2(7)", "heisenberg(3)"}) {
    CAPTURE(spec);
    const IrrepTable& t = table_for(spec);
    for (const auto& rho : t.irreps()) {
      const RepResiduals r = representation_residuals(rho);
      CHECK(r.identity <= 1e-9);
      CHECK(r.homomorphism <= 1e-9);
      CHECK(r.unitarity <= 1e-8);
      CHECK(rho.is_irreducible());
    }
    CHECK(schur_orthogonality_residual(t) <= 1e-9);
    CHECK(character_orthonormality_residual(t) <= 1e-9);
  }
}

TEST_CASE("A5 character values on 5-cycles are the golden-ratio pair") {
  const IrrepTable& t = table_for("alternating(5)");
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double psi = (1 - std::sqrt(5.0)) / 2;
  for (std::size_t i = 1; i <= 2; ++i) {
    REQUIRE(t[i].dim() == 3);
    int golden = 0;
    for (const Complex c : t[i].class_character())
      if (std::abs(c - phi) < 1e-9 || std::abs(c - psi) < 1e-9) ++golden;
    CHECK(golden == 2);
  }
}

TEST_CASE("ordering and characters do not depend on the seed") {
  const GroupPtr g = group_for("psl2(7)");
  const IrrepTable a = decompose(g, 1);
  const IrrepTable b = decompose(g, 987654321);
  CHECK(a.dims() == b.dims());
  CHECK((a.character_table() - b.character_table()).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("Frobenius-Schur indicators") {
  for (const auto& rho : table_for("alternating(5)").irreps()) CHECK(frobenius_schur(rho) == 1);
  const IrrepTable& z3 = table_for("cyclic(3)");
  CHECK(frobenius_schur(z3[0]) == 1);
  CHECK(frobenius_schur(z3[1]) == 0);
  CHECK(frobenius_schur(z3[2]) == 0);
  CHECK(frobenius_schur(quasirep::testing::irrep_of_dim(table_for("quaternion8"), 2)) == -1);
  CHECK(frobenius_schur(quasirep::testing::irrep_of_dim(table_for("dihedral(4)"), 2)) == 1);
  const IrrepTable& psl = table_for("psl2(7)");
  CHECK(frobenius_schur(psl[1]) == 0);  // the two 3-dim irreps are complex conjugates
  CHECK(psl.dual(1) == 2);
}

TEST_CASE("tensor-square statistics") {
  // S3 2-dim character (2, 0, -1) with class sizes (1, 3, 2): E|chi|^4 = (16 + 2) / 6
  const UnitaryRep& rho = quasirep::testing::irrep_of_dim(table_for("symmetric(3)"), 2);
  const TensorSquareStats s = tensor_square_stats(rho);
  CHECK(s.fourth_moment == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.square_moment == doctest::Approx(3.0).epsilon(1e-12));
  for (const auto& r : table_for("alternating(6)").irreps()) {
    const TensorSquareStats t = tensor_square_stats(r);
    CHECK(t.square_moment <= t.fourth_moment + 1e-9);
  }
}

TEST_CASE("regular representation") {
  const GroupPtr g = group_for("symmetric(3)");
  const RegularRepresentation reg = regular_representation(g);
  CHECK(reg.character(g->identity()) == Complex(6));
  for (Element x = 1; x < 6; ++x) CHECK(reg.character(x) == Complex(0));
  const Matrix m = reg.matrix(2);
  CHECK((m.adjoint() * m - Matrix::Identity(6, 6)).norm() == 0.0);
  CHECK(code_of([] { regular_representation(group_for("symmetric(6)")); }) == ErrorCode::kOrderCapExceeded);
  CHECK(code_of([] { decompose(group_for("symmetric(6)"), 0); }) == ErrorCode::kOrderCapExceeded);
}

TEST_CASE("symmetrized projector averages to a multiple of the identity") {
  Rng rng = make_rng(5);
  const UnitaryRep& rho = quasirep::testing::irrep_of_dim(table_for("alternating(5)"), 4);
  const Matrix w = haar_unitary(rng, 4).leftCols(3);
  CHECK(symmetrized_projector_residual(rho, w * w.adjoint()) <= 1e-12);
}

TEST_CASE("irrep file round trip is bit exact") {
  const IrrepTable& t = table_for("alternating(5)");
  std::stringstream s;
  write_irreps(s, t);
  const std::string first = s.str();
  const IrrepTable back = read_irreps(s, t.group_ptr());
  REQUIRE(back.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (Element x = 0; x < t.group().order(); ++x) CHECK((back[i](x).array() == t[i](x).array()).all());
  std::stringstream again;
  write_irreps(again, back);
  CHECK(again.str() == first);
}

TEST_CASE("irrep file rejection") {
  const IrrepTable& t = table_for("symmetric(3)");
  std::stringstream s;
  write_irreps(s, t);
  std::istringstream wrong_group(s.str());
  CHECK(code_of([&] { read_irreps(wrong_group, group_for("cyclic(6)")); }) == ErrorCode::kParseError);

  IrrepTable partial(t.group_ptr(), {t[0], t[2]});
  std::stringstream p;
  write_irreps(p, partial);
  std::istringstream in(p.str());
  CHECK(code_of([&] { read_irreps(in, t.group_ptr()); }) == ErrorCode::kIncompleteTable);

  std::string text = s.str();
  text.replace(text.find("count="), 7, "count=x");
  std::istringstream bad(text);
  CHECK(code_of([&] { read_irreps(bad, t.group_ptr()); }) == ErrorCode::kParseError);
}
