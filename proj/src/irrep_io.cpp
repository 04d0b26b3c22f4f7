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
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "quasirep/error.hpp"
#include "quasirep/repr.hpp"

namespace quasirep {

namespace {

constexpr const char* kIrrepHeader = "quasirep-irreps v1";

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParseError, "irrep file line " + std::to_string(line) + ": " + what);
}

void put_double(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

bool parse_size(std::string_view text, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

void write_irreps(std::ostream& out, const IrrepTable& table) {
  out << kIrrepHeader << '\n'
      << "hash=" << table.group().hash() << '\n'
      << "count=" << table.size() << '\n';
  for (const auto& rho : table.irreps()) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    out << "dim=" << d << '\n';
    for (const auto& m : rho.matrices())
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
          if (j) out << ' ';
          put_double(out, m(i, j).real());
          out << ' ';
          put_double(out, m(i, j).imag());
        }
        out << '\n';
      }
  }
}

IrrepTable read_irreps(std::istream& in, GroupPtr group, const Tolerances& tol) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) parse_fail(lineno + 1, std::string("missing ") + what);
    ++lineno;
  };
  next("header");
  if (line != kIrrepHeader) parse_fail(lineno, std::string("expected header '") + kIrrepHeader + "'");
  next("hash line");
  if (line.rfind("hash=", 0) != 0 || line.size() != 5 + 64) parse_fail(lineno, "expected 'hash=<64 hex>'");
  if (line.substr(5) != group->hash()) parse_fail(lineno, "hash does not match the group");
  next("count line");
  std::size_t count = 0;
  if (line.rfind("count=", 0) != 0 || !parse_size(std::string_view(line).substr(6), count))
    parse_fail(lineno, "expected 'count=<k>'");

  std::vector<UnitaryRep> irreps;
  for (std::size_t r = 0; r < count; ++r) {
    next("dim line");
    std::size_t d = 0;
    if (line.rfind("dim=", 0) != 0 || !parse_size(std::string_view(line).substr(4), d) || d == 0)
      parse_fail(lineno, "expected 'dim=<d>'");
    const auto di = static_cast<Eigen::Index>(d);
    std::vector<Matrix> mats(group->order(), Matrix(di, di));
    for (auto& m : mats) {
      for (Eigen::Index i = 0; i < di; ++i) {
        next("matrix row");
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (Eigen::Index j = 0; j < 2 * di; ++j) {
          if (j > 0) {
            if (p == end || *p != ' ') parse_fail(lineno, "expected " + std::to_string(2 * d) + " numbers");
            ++p;
          }
          double v = 0;
          auto [ptr, ec] = std::from_chars(p, end, v);
          if (ec != std::errc()) parse_fail(lineno, "malformed number");
          p = ptr;
          if (j % 2 == 0)
            m(i, j / 2).real(v);
          else
            m(i, j / 2).imag(v);
        }
        if (p != end) parse_fail(lineno, "trailing characters");
      }
    }
    irreps.emplace_back(group, std::move(mats), tol);
  }
  if (std::getline(in, line)) parse_fail(lineno + 1, "unexpected content after the last irrep");
  IrrepTable table(std::move(group), std::move(irreps));
  if (!table.is_complete()) fail(ErrorCode::kIncompleteTable, "irrep file does not hold a complete table");
  return table;
}

void save_irreps(const IrrepTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  write_irreps(out, table);
  if (!out) fail(ErrorCode::kIoError, "write failed for " + path.string());
}

IrrepTable load_irreps(const std::filesystem::path& path, GroupPtr group, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIoError, "cannot open " + path.string());
  return read_irreps(in, std::move(group), tol);
}

}  // namespace quasirep
