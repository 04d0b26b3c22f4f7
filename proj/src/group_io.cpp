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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "quasirep/error.hpp"
#include "quasirep/group.hpp"

namespace quasirep {

namespace {

constexpr const char* kGroupHeader = "quasirep-group v1";

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParseError, "group file line " + std::to_string(line) + ": " + what);
}

bool parse_uint(std::string_view text, std::size_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

void write_group(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << kGroupHeader << '\n' << "name=" << g.name() << '\n' << "order=" << n << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << g.table()[x * n + y];
    }
    out << '\n';
  }
}

FiniteGroup read_group(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) parse_fail(lineno + 1, std::string("missing ") + what);
    ++lineno;
  };

  next("header");
  if (line != kGroupHeader) parse_fail(lineno, std::string("expected header '") + kGroupHeader + "'");
  next("name line");
  if (line.rfind("name=", 0) != 0) parse_fail(lineno, "expected 'name=<label>'");
  std::string name = line.substr(5);
  next("order line");
  std::size_t n = 0;
  if (line.rfind("order=", 0) != 0 || !parse_uint(std::string_view(line).substr(6), n) || n == 0)
    parse_fail(lineno, "expected 'order=<positive integer>'");
  if (n > default_tolerances().closure_cap)
    parse_fail(lineno, "order exceeds the cap of " + std::to_string(default_tolerances().closure_cap));

  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    next("table row");
    std::string_view rest(line);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t sp = rest.find(' ');
      const std::string_view tok = y + 1 < n ? rest.substr(0, sp) : rest;
      if (y + 1 < n && sp == std::string_view::npos)
        parse_fail(lineno, "expected " + std::to_string(n) + " entries");
      std::size_t v = 0;
      if (!parse_uint(tok, v)) parse_fail(lineno, "malformed entry '" + std::string(tok) + "'");
      if (v >= n) parse_fail(lineno, "entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Element>(v));
      if (y + 1 < n) rest.remove_prefix(sp + 1);
    }
  }
  if (std::getline(in, line)) parse_fail(lineno + 1, "unexpected content after the table");
  return FiniteGroup::from_table(n, std::move(table), std::move(name));
}

void save_group(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  write_group(out, g);
  if (!out) fail(ErrorCode::kIoError, "write failed for " + path.string());
}

FiniteGroup load_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIoError, "cannot open " + path.string());
  return read_group(in);
}

}  // namespace quasirep
