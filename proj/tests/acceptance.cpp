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

// Runs the acceptance criteria: `acceptance` for all, `acceptance A3` for one.
// Prints one PASS/FAIL line per criterion followed by its measurements;
// exits 0 iff every requested criterion passed.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "quasirep/error.hpp"
#include "quasirep/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const char* a = argv[i];
    if (a[0] == 'A') ++a;
    char* end = nullptr;
    const long id = std::strtol(a, &end, 10);
    if (*a == '\0' || *end != '\0' || id < 1 || id > 10) {
      std::fprintf(stderr, "usage: acceptance [A1..A10]...\n");
      return 2;
    }
    ids.push_back(static_cast<int>(id));
  }
  if (ids.empty()) ids = quasirep::criteria_in(quasirep::Scope::kFull);

  const quasirep::VerifyOptions opts;
  bool all = true;
  for (int id : ids) {
    quasirep::CheckRecord rec;
    try {
      rec = quasirep::run_criterion(id, opts);
    } catch (const std::exception& e) {
      rec.id = "A" + std::to_string(id);
      rec.detail = e.what();
      rec.passed = false;
    }
    bool within_time = rec.time_limit <= 0 || rec.seconds <= rec.time_limit;
    const bool ok = rec.passed && within_time;
    all = all && ok;
    std::printf("%s %s %s\n", rec.id.c_str(), ok ? "PASS" : "FAIL", rec.name.c_str());
    for (const auto& m : rec.measurements)
      std::printf("  %s %s: %.12g %s %.12g\n", m.passed ? "ok  " : "FAIL", m.name.c_str(), m.measured,
                  m.relation.c_str(), m.bound);
    if (rec.time_limit > 0)
      std::printf("  %s runtime: %.1f s <= %.0f s\n", within_time ? "ok  " : "FAIL", rec.seconds, rec.time_limit);
    if (!rec.detail.empty()) std::printf("  detail: %s\n", rec.detail.c_str());
  }
  return all ? 0 : 1;
}
