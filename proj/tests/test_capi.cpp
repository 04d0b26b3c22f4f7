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

// Exercises libquasirep through the public C header alone.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "quasirep/quasirep.h"

#include <string>

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  qr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("group handles") {
  qr_group* g = nullptr;
  REQUIRE(qr_group_from_spec("alternating(5)", &g) == QR_OK);
  CHECK(qr_group_order(g) == 60);
  CHECK(qr_group_class_count(g) == 5);
  char* s = nullptr;
  REQUIRE(qr_group_summary(g, 0, &s) == QR_OK);
  CHECK(take(s).find("order=60") != std::string::npos);
  qr_group_free(g);

  qr_group* bad = nullptr;
  CHECK(qr_group_from_spec("alternating(", &bad) == QR_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(qr_last_error()).size() > 0);
  CHECK(qr_group_from_spec("symmetric(9)", &bad) == QR_ERR_UNSUPPORTED_PARAMETER);
  CHECK(qr_status_is_input_error(QR_ERR_PARSE));
  CHECK_FALSE(qr_status_is_input_error(QR_OK));
  CHECK(std::string(qr_status_name(QR_ERR_ODD_ORDER)).size() > 0);
  CHECK(std::string(qr_version()) == "0.1.0");
}

TEST_CASE("group from a table") {
  const uint32_t z3[] = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  qr_group* g = nullptr;
  REQUIRE(qr_group_from_table(3, z3, "z3", &g) == QR_OK);
  CHECK(qr_group_order(g) == 3);
  qr_group_free(g);
  const uint32_t broken[] = {0, 1, 2, 1, 1, 0, 2, 0, 1};
  CHECK(qr_group_from_table(3, broken, "x", &g) == QR_ERR_NOT_A_GROUP);
}

TEST_CASE("irreps, sweep and hom") {
  qr_group* g = nullptr;
  qr_group* h = nullptr;
  REQUIRE(qr_group_from_spec("alternating(5)", &g) == QR_OK);
  REQUIRE(qr_group_from_spec("symmetric(3)", &h) == QR_OK);
  qr_irreps* tg = nullptr;
  qr_irreps* th = nullptr;
  REQUIRE(qr_irreps_compute(g, nullptr, 0, 1.0, &tg) == QR_OK);
  REQUIRE(qr_irreps_compute(h, nullptr, 0, 1.0, &th) == QR_OK);
  CHECK(qr_irreps_count(tg) == 5);
  CHECK(qr_irreps_dim(tg, 4) == 5);
  CHECK(qr_irreps_d_min(tg) == 3);

  qr_sweep_options so{};
  so.construction = QR_MINOR;
  so.d_psi_min = 1;
  so.d_psi_max = 2;
  so.seeds = 1;
  char* out = nullptr;
  REQUIRE(qr_sweep(tg, &so, 1, &out) == QR_OK);
  const auto rows = nlohmann::json::parse(take(out));
  CHECK(rows.dump().find("thm4_value") != std::string::npos);

  qr_hom_options ho{};
  ho.generator = "balanced_random";
  ho.seeds = 2;
  REQUIRE(qr_hom(tg, th, &ho, 1, &out) == QR_OK);
  CHECK(nlohmann::json::parse(take(out)).contains("summary"));
  ho.generator = "no-such";
  CHECK(qr_hom(tg, th, &ho, 1, &out) == QR_ERR_PARSE);

  REQUIRE(qr_audit(tg, 4, 3, 200, 1, &out) == QR_OK);
  CHECK(nlohmann::json::parse(take(out)).is_object());

  qr_irreps_free(tg);
  qr_irreps_free(th);
  qr_group_free(g);
  qr_group_free(h);
}

TEST_CASE("twirl") {
  char* out = nullptr;
  REQUIRE(qr_twirl(6, 3, 0, 0, &out) == QR_OK);
  const std::string a = take(out);
  REQUIRE(qr_twirl(6, 3, 0, 0, &out) == QR_OK);
  CHECK(take(out) == a);
  CHECK(qr_twirl(3, 1, 0, 0, &out) == QR_ERR_DEGENERATE_DIMENSION);
}

TEST_CASE("run config") {
  char* out = nullptr;
  REQUIRE(qr_run_config(R"({"command": "twirl", "d_rho": 6, "d_psi": 3})", nullptr, &out) == QR_OK);
  CHECK(nlohmann::json::parse(take(out)).is_object());
  CHECK(qr_run_config(R"({"command": "twirl", "bogus": 1})", nullptr, &out) == QR_ERR_PARSE);
}
