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

#include "quasirep/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "quasirep/error.hpp"

namespace quasirep {

namespace fs = std::filesystem;

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("QUASIREP_CACHE"); env != nullptr && *env != '\0') return env;
  return fs::path(".quasirep");
}

void atomic_write(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) fail(ErrorCode::kIoError, "cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::kIoError, "cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::kIoError, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    fail(ErrorCode::kIoError, "cannot rename into " + path.string() + ": " + ec.message());
  }
}

fs::path Cache::group_path(const FiniteGroup& g) const { return dir_ / (g.hash() + ".group"); }

fs::path Cache::irreps_path(const FiniteGroup& g) const { return dir_ / (g.hash() + ".irreps"); }

void Cache::store_group(const FiniteGroup& g) const {
  const fs::path p = group_path(g);
  if (fs::exists(p)) return;
  std::ostringstream out;
  write_group(out, g);
  atomic_write(p, out.str());
}

IrrepTable Cache::load_or_decompose(const GroupPtr& g, std::uint64_t seed, const Tolerances& tol) const {
  const fs::path p = irreps_path(*g);
  if (fs::exists(p)) {
    try {
      return load_irreps(p, g, tol);
    } catch (const Error&) {
      // stale or corrupt entry: fall through and rebuild it
    }
  }
  IrrepTable table = decompose(g, seed, tol);
  std::ostringstream out;
  write_irreps(out, table);
  store_group(*g);
  atomic_write(p, out.str());
  return table;
}

}  // namespace quasirep
