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

#include "quasirep/quasirep.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "quasirep/approx_hom.hpp"
#include "quasirep/cache.hpp"
#include "quasirep/error.hpp"
#include "quasirep/report.hpp"
#include "quasirep/twirl.hpp"
#include "quasirep/verify.hpp"
#include "quasirep/version.hpp"

struct qr_group {
  quasirep::GroupPtr group;
};

struct qr_irreps {
  std::shared_ptr<const quasirep::IrrepTable> table;
  quasirep::Tolerances tol;
};

namespace {

thread_local std::string g_last_error;

qr_status to_status(quasirep::ErrorCode code) {
  return static_cast<qr_status>(static_cast<int>(code) + 1);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
qr_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return QR_OK;
  } catch (const quasirep::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QR_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) quasirep::fail(quasirep::ErrorCode::kInvalidArgument, what);
}

quasirep::Tolerances scaled_tolerances(double factor) {
  require(factor > 0 && std::isfinite(factor), "tolerance scale must be positive");
  return quasirep::default_tolerances().scaled(factor);
}

}  // namespace

extern "C" {

const char* qr_last_error(void) { return g_last_error.c_str(); }

const char* qr_status_name(qr_status status) {
  if (status == QR_OK) return "Ok";
  if (status == QR_ERR_INTERNAL) return "InternalError";
  if (status < QR_OK || status > QR_ERR_INTERNAL) return "Unknown";
  // the names are string literals, so data() is NUL-terminated
  return quasirep::error_code_name(static_cast<quasirep::ErrorCode>(status - 1)).data();
}

int qr_status_is_input_error(qr_status status) {
  switch (status) {
    case QR_ERR_NOT_A_GROUP:
    case QR_ERR_CLOSURE_CAP:
    case QR_ERR_UNSUPPORTED_PARAMETER:
    case QR_ERR_ORDER_CAP:
    case QR_ERR_DIMENSION:
    case QR_ERR_ODD_ORDER:
    case QR_ERR_NOT_A_HOMOMORPHISM:
    case QR_ERR_DEGENERATE_DIMENSION:
    case QR_ERR_PARSE:
    case QR_ERR_IO:
    case QR_ERR_INVALID_ARGUMENT:
      return 1;
    default:
      return 0;
  }
}

const char* qr_version(void) { return quasirep::kVersion; }

void qr_string_free(char* s) { std::free(s); }

qr_status qr_group_from_spec(const char* spec, qr_group** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new qr_group{std::make_shared<const quasirep::FiniteGroup>(quasirep::named_group(spec))};
  });
}

qr_status qr_group_load(const char* path, qr_group** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new qr_group{std::make_shared<const quasirep::FiniteGroup>(quasirep::load_group(path))};
  });
}

qr_status qr_group_from_table(size_t n, const uint32_t* table, const char* name, qr_group** out) {
  return guarded([&] {
    require(table && out && n > 0, "null argument");
    std::vector<quasirep::Element> t(table, table + n * n);
    *out = new qr_group{std::make_shared<const quasirep::FiniteGroup>(
        quasirep::FiniteGroup::from_table(n, std::move(t), name ? name : ""))};
  });
}

qr_status qr_group_save(const qr_group* g, const char* path) {
  return guarded([&] {
    require(g && path, "null argument");
    std::ostringstream s;
    quasirep::write_group(s, *g->group);
    quasirep::atomic_write(path, s.str());
  });
}

void qr_group_free(qr_group* g) { delete g; }

size_t qr_group_order(const qr_group* g) { return g ? g->group->order() : 0; }

size_t qr_group_class_count(const qr_group* g) { return g ? g->group->class_count() : 0; }

qr_status qr_group_summary(const qr_group* g, int json, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup(quasirep::group_summary(*g->group, json != 0));
  });
}

qr_status qr_group_cache_store(const qr_group* g, const char* cache_dir) {
  return guarded([&] {
    require(g && cache_dir, "null argument");
    quasirep::Cache(cache_dir).store_group(*g->group);
  });
}

qr_status qr_irreps_compute(const qr_group* g, const char* cache_dir, uint64_t seed, double tolerance_scale,
                            qr_irreps** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const quasirep::Tolerances tol = scaled_tolerances(tolerance_scale);
    std::shared_ptr<const quasirep::IrrepTable> t;
    if (cache_dir) {
      const quasirep::Cache cache(cache_dir);
      cache.store_group(*g->group);
      t = std::make_shared<const quasirep::IrrepTable>(cache.load_or_decompose(g->group, seed, tol));
    } else {
      t = std::make_shared<const quasirep::IrrepTable>(quasirep::decompose(g->group, seed, tol));
    }
    *out = new qr_irreps{std::move(t), tol};
  });
}

void qr_irreps_free(qr_irreps* t) { delete t; }

size_t qr_irreps_count(const qr_irreps* t) { return t ? t->table->size() : 0; }

size_t qr_irreps_dim(const qr_irreps* t, size_t i) {
  return t && i < t->table->size() ? (*t->table)[i].dim() : 0;
}

size_t qr_irreps_d_min(const qr_irreps* t) { return t ? t->table->d_min() : 0; }

qr_status qr_irreps_summary(const qr_irreps* t, int json, char** out) {
  return guarded([&] {
    require(t && out, "null argument");
    *out = dup(quasirep::irreps_summary(*t->table, json != 0, t->tol));
  });
}

qr_status qr_sweep(const qr_irreps* t, const qr_sweep_options* opts, int json, char** out) {
  return guarded([&] {
    require(t && opts && out, "null argument");
    quasirep::SweepSpec spec;
    spec.construction = opts->construction == QR_POLAR ? quasirep::Construction::kPolar
                                                       : quasirep::Construction::kMinor;
    if (opts->irreps) spec.irreps.assign(opts->irreps, opts->irreps + opts->irrep_count);
    spec.d_psi_min = opts->d_psi_min;
    spec.d_psi_max = opts->d_psi_max;
    spec.seeds = opts->seeds;
    spec.seed = opts->seed;
    spec.random_subspace = opts->random_subspace != 0;
    const auto rows = quasirep::run_sweep(*t->table, spec, t->tol);
    if (json) {
      *out = dup(quasirep::sweep_json(rows));
    } else {
      std::ostringstream s;
      quasirep::write_sweep_csv(s, rows);
      *out = dup(s.str());
    }
  });
}

qr_status qr_hom(const qr_irreps* source, const qr_irreps* target, const qr_hom_options* opts, int json,
                 char** out) {
  return guarded([&] {
    require(source && target && opts && out, "null argument");
    quasirep::HomSpec spec;
    spec.kind = quasirep::parse_map_kind(opts->generator ? opts->generator : "balanced_random");
    if (opts->images) spec.images = quasirep::parse_images(opts->images);
    spec.flip_fraction = opts->flip_fraction;
    spec.seeds = opts->seeds;
    spec.seed = opts->seed;
    const auto rows = quasirep::run_hom(*source->table, *target->table, spec);
    if (json) {
      *out = dup(quasirep::hom_json(source->table->group(), target->table->group(), spec, rows));
    } else {
      std::ostringstream s;
      quasirep::write_hom_csv(s, rows);
      *out = dup(s.str());
    }
  });
}

qr_status qr_twirl(size_t d_rho, size_t d_psi, size_t samples, uint64_t seed, char** out) {
  return guarded([&] {
    require(out, "null argument");
    const quasirep::TwirlExpansion ex = quasirep::twirl_exact(d_rho, d_psi);
    std::optional<quasirep::TwirlMonteCarlo> mc;
    if (samples > 0) mc = quasirep::twirl_monte_carlo(d_rho, d_psi, samples, seed);
    *out = dup(quasirep::twirl_json(ex, mc));
  });
}

qr_status qr_audit(const qr_irreps* t, size_t irrep, size_t d_psi, size_t samples, uint64_t seed, char** out) {
  return guarded([&] {
    require(t && out, "null argument");
    require(irrep < t->table->size(), "irrep index out of range");
    *out = dup(quasirep::audit_json(quasirep::error_term_audit((*t->table)[irrep], d_psi, samples, seed)));
  });
}

qr_status qr_verify(const qr_verify_options* opts, char** out, int* passed, char** first_failure) {
  return guarded([&] {
    require(opts && out && passed, "null argument");
    quasirep::VerifyOptions v;
    v.seed = opts->seed;
    if (opts->cache_dir) v.cache_dir = opts->cache_dir;
    if (opts->negative_control) v.negative_control = opts->negative_control;
    v.tolerances = scaled_tolerances(opts->tolerance_scale);
    if (opts->twirl_samples > 0) v.twirl_samples = opts->twirl_samples;
    const quasirep::RunManifest m =
        quasirep::run_verify(opts->full ? quasirep::Scope::kFull : quasirep::Scope::kFast, v);
    *passed = m.passed() ? 1 : 0;
    *out = dup(quasirep::manifest_json(m));
    if (first_failure) *first_failure = dup(m.first_failure());
  });
}

qr_status qr_run_config(const char* json_text, const char* cache_dir, char** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    const quasirep::ExperimentConfig c = quasirep::parse_experiment_config(json_text);
    const quasirep::Tolerances tol = scaled_tolerances(c.tolerance);
    auto table_for = [&](const std::string& spec) {
      require(!spec.empty(), "config needs a group");
      auto g = std::make_shared<const quasirep::FiniteGroup>(quasirep::named_group(spec));
      const quasirep::Cache cache(quasirep::resolve_cache_dir(
          cache_dir ? std::optional<std::string>(cache_dir) : std::nullopt));
      return cache.load_or_decompose(g, c.seed, tol);
    };
    std::string result;
    if (c.command == "sweep") {
      const quasirep::IrrepTable t = table_for(c.group);
      quasirep::SweepSpec spec;
      spec.construction = quasirep::parse_construction(c.construction);
      spec.irreps = c.irreps;
      spec.d_psi_min = c.d_psi_min;
      spec.d_psi_max = c.d_psi_max;
      spec.seeds = c.seeds;
      spec.seed = c.seed;
      spec.random_subspace = c.random_subspace;
      const auto rows = quasirep::run_sweep(t, spec, tol);
      if (c.format == "json") {
        result = quasirep::sweep_json(rows);
      } else {
        std::ostringstream s;
        quasirep::write_sweep_csv(s, rows);
        result = s.str();
      }
    } else if (c.command == "hom") {
      const quasirep::IrrepTable g = table_for(c.group);
      const quasirep::IrrepTable h = table_for(c.target);
      quasirep::HomSpec spec;
      spec.kind = quasirep::parse_map_kind(c.generator);
      spec.images = quasirep::parse_images(c.images);
      spec.flip_fraction = c.flip_fraction;
      spec.seeds = c.seeds;
      spec.seed = c.seed;
      const auto rows = quasirep::run_hom(g, h, spec);
      if (c.format == "csv") {
        std::ostringstream s;
        quasirep::write_hom_csv(s, rows);
        result = s.str();
      } else {
        result = quasirep::hom_json(g.group(), h.group(), spec, rows);
      }
    } else if (c.command == "twirl") {
      const quasirep::TwirlExpansion ex = quasirep::twirl_exact(c.d_rho, c.d_psi);
      std::optional<quasirep::TwirlMonteCarlo> mc;
      if (c.samples > 0) mc = quasirep::twirl_monte_carlo(c.d_rho, c.d_psi, c.samples, c.seed, tol);
      result = quasirep::twirl_json(ex, mc);
    } else {
      const quasirep::IrrepTable t = table_for(c.group);
      require(!c.irreps.empty() && c.irreps.front() < t.size(), "audit config needs one valid irrep index");
      result = quasirep::audit_json(
          quasirep::error_term_audit(t[c.irreps.front()], c.d_psi, c.samples ? c.samples : 2000, c.seed));
    }
    if (!c.out.empty()) {
      quasirep::atomic_write(c.out, result);
      *out = dup("");
    } else {
      *out = dup(result);
    }
  });
}

}  // extern "C"
