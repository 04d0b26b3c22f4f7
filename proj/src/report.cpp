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

#include "quasirep/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "quasirep/error.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

using Json = nlohmann::ordered_json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    if constexpr (std::is_floating_point_v<T>) s += num(v[i]);
    else s += std::to_string(v[i]);
  }
  return s;
}

const char* construction_name(Construction c) { return c == Construction::kMinor ? "minor" : "polar"; }

const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::kRandom: return "random";
    case MapKind::kBalancedRandom: return "balanced_random";
    case MapKind::kGenuine: return "genuine_hom";
    case MapKind::kPerturbed: return "perturbed_hom";
    case MapKind::kIdentity: return "identity";
  }
  return "?";
}

}  // namespace

std::uint64_t sweep_seed(std::uint64_t base, std::size_t i) { return derive_seed(base, i); }

std::vector<SweepRow> run_sweep(const IrrepTable& table, const SweepSpec& spec, const Tolerances& tol) {
  std::vector<std::size_t> irreps = spec.irreps;
  if (irreps.empty())
    for (std::size_t i = 1; i < table.size(); ++i) irreps.push_back(i);
  std::vector<SweepRow> rows;
  for (std::size_t idx : irreps) {
    if (idx >= table.size())
      fail(ErrorCode::kInvalidArgument, "irrep index " + std::to_string(idx) + " out of range");
    const UnitaryRep& rho = table[idx];
    const std::size_t hi = std::min(spec.d_psi_max, rho.dim());
    for (std::size_t d = std::max<std::size_t>(spec.d_psi_min, 1); d <= hi; ++d)
      for (std::size_t s = 0; s < spec.seeds; ++s) {
        SweepRow row;
        row.group = table.group().name();
        row.construction = construction_name(spec.construction);
        row.irrep = idx;
        row.d_rho = rho.dim();
        row.d_psi = d;
        row.ratio = static_cast<double>(d) / static_cast<double>(rho.dim());
        row.seed = sweep_seed(spec.seed, s);
        if (spec.construction == Construction::kMinor) {
          const SubspaceChoice choice =
              spec.random_subspace ? SubspaceChoice(HaarSubspace{row.seed}) : SubspaceChoice(LeadingSubspace{});
          row.report = defect_direct(minor_construction(rho, d, choice, tol), table.d_min(), tol);
        } else {
          const PolarMinor pm = polar_construction(rho, d, row.seed, tol);
          row.seed = pm.seed_used;
          row.report = defect_direct(pm.polar, table.d_min(), tol);
        }
        row.thm4_value = minor_defect(d, rho.dim());
        row.thm5_bound = polar_defect_bound(d, rho.dim());
        row.beats_random = row.report.normalized_defect < 1.0;
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "group,construction,d_rho,d_psi,ratio,seed,defect,normalized_defect,thm1_bound,"
         "thm4_value,thm5_bound,agreement_prob,mean_opnorm,admissibility_residual,irrep,beats_random\n";
  for (const auto& r : rows) {
    out << csv_field(r.group) << ',' << r.construction << ',' << r.d_rho << ',' << r.d_psi << ','
        << num(r.ratio) << ',' << r.seed << ',' << num(r.report.defect) << ','
        << num(r.report.normalized_defect) << ',' << num(r.report.thm1_bound) << ','
        << num(r.thm4_value) << ',' << num(r.thm5_bound) << ',' << num(r.report.agreement_prob) << ','
        << num(r.report.mean_opnorm) << ',' << num(r.report.admissibility_residual) << ',' << r.irrep << ','
        << (r.beats_random ? 1 : 0) << '\n';
  }
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back({{"group", r.group},
                   {"construction", r.construction},
                   {"irrep", r.irrep},
                   {"d_rho", r.d_rho},
                   {"d_psi", r.d_psi},
                   {"ratio", r.ratio},
                   {"seed", r.seed},
                   {"defect", r.report.defect},
                   {"normalized_defect", r.report.normalized_defect},
                   {"triple_trace", {r.report.triple_trace.real(), r.report.triple_trace.imag()}},
                   {"thm1_bound", r.report.thm1_bound},
                   {"cor1_bound", r.report.cor1_bound},
                   {"thm4_value", r.thm4_value},
                   {"thm5_bound", r.thm5_bound},
                   {"agreement_prob", r.report.agreement_prob},
                   {"mean_opnorm", r.report.mean_opnorm},
                   {"admissibility_residual", r.report.admissibility_residual},
                   {"beats_random", r.beats_random}});
  return Json{{"rows", arr}}.dump(2) + "\n";
}

std::vector<HomRow> run_hom(const IrrepTable& source, const IrrepTable& target, const HomSpec& spec) {
  const GroupPtr& g = source.group_ptr();
  const GroupPtr& h = target.group_ptr();
  std::vector<HomRow> rows;
  auto add = [&](std::uint64_t seed, const GroupMap& f) { rows.push_back({seed, evaluate(f, source, target)}); };
  switch (spec.kind) {
    case MapKind::kGenuine:
      add(spec.seed, genuine_hom(g, h, spec.images));
      return rows;
    case MapKind::kIdentity:
      add(spec.seed, identity_map(g, h));
      return rows;
    default:
      break;
  }
  std::optional<GroupMap> base;
  if (spec.kind == MapKind::kPerturbed)
    base = spec.images.empty() ? identity_map(g, h) : genuine_hom(g, h, spec.images);
  for (std::size_t i = 0; i < spec.seeds; ++i) {
    const std::uint64_t s = sweep_seed(spec.seed, i);
    switch (spec.kind) {
      case MapKind::kRandom: add(s, random_map(g, h, s)); break;
      case MapKind::kBalancedRandom: add(s, balanced_random_map(g, h, s)); break;
      default: add(s, perturbed_hom(*base, spec.flip_fraction, s)); break;
    }
  }
  return rows;
}

std::string hom_json(const FiniteGroup& g, const FiniteGroup& h, const HomSpec& spec,
                     const std::vector<HomRow>& rows) {
  Json arr = Json::array();
  double max_agree = 0, min2 = 1, min3 = 1;
  std::size_t v2 = 0, v3 = 0;
  for (const auto& row : rows) {
    const HomReport& r = row.report;
    Json j{{"seed", row.seed},
           {"agreement_prob", r.agreement_prob},
           {"collision_prob", r.collision_prob},
           {"epsilon", r.epsilon},
           {"thm2_bound", r.thm2_bound},
           {"thm2_sigma", r.thm2_sigma ? Json(*r.thm2_sigma) : Json(nullptr)},
           {"thm3_bound", r.thm3_bound},
           {"r_h", r.r_h},
           {"d_min", r.d_min}};
    arr.push_back(std::move(j));
    max_agree = std::max(max_agree, r.agreement_prob);
    min2 = std::min(min2, r.thm2_bound);
    min3 = std::min(min3, r.thm3_bound);
    if (r.agreement_prob > r.thm2_bound + 1e-9) ++v2;
    if (r.agreement_prob > r.thm3_bound + 1e-9) ++v3;
  }
  Json out{{"source", g.name()},
           {"target", h.name()},
           {"generator", map_kind_name(spec.kind)},
           {"seed", spec.seed},
           {"seeds", spec.seeds},
           {"rows", arr},
           {"summary",
            {{"max_agreement", max_agree},
             {"min_thm2_bound", min2},
             {"min_thm3_bound", min3},
             {"thm2_violations", v2},
             {"thm3_violations", v3}}}};
  if (spec.kind == MapKind::kPerturbed) out["flip_fraction"] = spec.flip_fraction;
  return out.dump(2) + "\n";
}

void write_hom_csv(std::ostream& out, const std::vector<HomRow>& rows) {
  out << "seed,agreement_prob,collision_prob,epsilon,thm2_bound,thm2_sigma,thm3_bound,r_h,d_min\n";
  for (const auto& row : rows) {
    const HomReport& r = row.report;
    out << row.seed << ',' << num(r.agreement_prob) << ',' << num(r.collision_prob) << ','
        << num(r.epsilon) << ',' << num(r.thm2_bound) << ','
        << (r.thm2_sigma ? std::to_string(*r.thm2_sigma) : std::string()) << ',' << num(r.thm3_bound)
        << ',' << num(r.r_h) << ',' << r.d_min << '\n';
  }
}

std::vector<std::pair<Element, Element>> parse_images(const std::string& text) {
  std::vector<std::pair<Element, Element>> out;
  std::size_t pos = 0;
  auto number = [&](Element& v) {
    const char* begin = text.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == begin)
      fail(ErrorCode::kParseError, "generator images: expected an index at offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - text.data());
  };
  if (text.empty()) return out;
  while (true) {
    Element g = 0, h = 0;
    number(g);
    if (pos >= text.size() || text[pos] != ':')
      fail(ErrorCode::kParseError, "generator images: expected ':' at offset " + std::to_string(pos));
    ++pos;
    number(h);
    out.emplace_back(g, h);
    if (pos == text.size()) break;
    if (text[pos] != ',')
      fail(ErrorCode::kParseError, "generator images: expected ',' at offset " + std::to_string(pos));
    ++pos;
  }
  return out;
}

MapKind parse_map_kind(const std::string& name) {
  if (name == "random") return MapKind::kRandom;
  if (name == "balanced_random" || name == "balanced") return MapKind::kBalancedRandom;
  if (name == "genuine_hom" || name == "genuine") return MapKind::kGenuine;
  if (name == "perturbed_hom" || name == "perturbed") return MapKind::kPerturbed;
  if (name == "identity") return MapKind::kIdentity;
  fail(ErrorCode::kParseError, "unknown map generator '" + name + "'");
}

Construction parse_construction(const std::string& name) {
  if (name == "minor") return Construction::kMinor;
  if (name == "polar") return Construction::kPolar;
  fail(ErrorCode::kParseError, "unknown construction '" + name + "'");
}

std::string twirl_json(const TwirlExpansion& exact, const std::optional<TwirlMonteCarlo>& mc) {
  Json ex, coeffs, errs;
  for (std::size_t c = 0; c < kS4Classes; ++c) {
    const std::string name(s4_class_name(c));
    ex[name] = exact.coefficients[c];
    if (mc) {
      coeffs[name] = mc->expansion.coefficients[c];
      errs[name] = mc->standard_errors[c];
    }
  }
  Json out{{"d_rho", exact.d_rho}, {"d_psi", exact.d_psi}};
  if (mc) {
    Json gram;
    for (std::size_t c = 0; c < kS4Classes; ++c) gram[std::string(s4_class_name(c))] = mc->gram_coefficients[c];
    out["coefficients"] = coeffs;
    out["stderr"] = errs;
    out["samples"] = mc->samples;
    out["seed"] = mc->seed;
    out["exact"] = ex;
    out["gram_coefficients"] = gram;
    out["gram_condition"] = mc->gram_condition;
  } else {
    out["coefficients"] = ex;
  }
  return out.dump(2) + "\n";
}

std::string audit_json(const ErrorTermAudit& a) {
  Json out{{"d_rho", a.d_rho},
           {"d_psi", a.d_psi},
           {"monte_carlo", a.monte_carlo},
           {"monte_carlo_stderr", a.monte_carlo_stderr},
           {"expansion", a.expansion},
           {"leading", a.leading},
           {"moments",
            {{"abs_chi_2", a.second_moment},
             {"abs_chi_4", a.fourth_moment},
             {"abs_chi_sq_2", a.square_moment},
             {"mixed", a.mixed_moment}}},
           {"samples", a.samples},
           {"seed", a.seed}};
  return out.dump(2) + "\n";
}

std::string group_summary(const FiniteGroup& g, bool json) {
  const auto sizes = g.class_sizes();
  if (json) {
    Json out{{"name", g.name()},
             {"order", g.order()},
             {"classes", g.class_count()},
             {"class_sizes", sizes},
             {"abelian", g.is_abelian()},
             {"hash", g.hash()}};
    return out.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "group=" << g.name() << " order=" << g.order() << " classes=" << g.class_count()
    << " class_sizes=" << join(sizes) << " abelian=" << (g.is_abelian() ? "true" : "false")
    << " hash=" << g.hash() << '\n';
  return s.str();
}

std::string irreps_summary(const IrrepTable& t, bool json, const Tolerances& tol) {
  std::vector<int> fs;
  for (const auto& rho : t.irreps()) fs.push_back(frobenius_schur(rho, tol));
  const auto dims = t.dims();
  if (json) {
    Json out{{"group", t.group().name()},
             {"order", t.group().order()},
             {"count", t.size()},
             {"dims", dims},
             {"d_min", t.d_min()},
             {"frobenius_schur", fs},
             {"schur_residual", schur_orthogonality_residual(t)}};
    return out.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "group=" << t.group().name() << " order=" << t.group().order() << " irreps=" << t.size()
    << " dims=" << join(dims) << " d_min=" << t.d_min() << " frobenius_schur=" << join(fs) << '\n';
  return s.str();
}

namespace {

const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys{
      "command", "group", "target",  "construction", "generator", "images", "flip_fraction",
      "irreps",  "d_psi_min", "d_psi_max", "d_rho",   "d_psi",     "seeds",  "seed",
      "samples", "random_subspace", "tolerance", "format", "out"};
  return keys;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, std::string("config: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::kParseError, "config: expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!config_keys().count(key)) fail(ErrorCode::kParseError, "config: unknown key '" + key + "'");
  ExperimentConfig c;
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    get("command", c.command);
    get("group", c.group);
    get("target", c.target);
    get("construction", c.construction);
    get("generator", c.generator);
    get("images", c.images);
    get("flip_fraction", c.flip_fraction);
    get("irreps", c.irreps);
    get("d_psi_min", c.d_psi_min);
    get("d_psi_max", c.d_psi_max);
    get("d_rho", c.d_rho);
    get("d_psi", c.d_psi);
    get("seeds", c.seeds);
    get("seed", c.seed);
    get("samples", c.samples);
    get("random_subspace", c.random_subspace);
    get("tolerance", c.tolerance);
    get("format", c.format);
    get("out", c.out);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("config: ") + e.what());
  }
  static const std::set<std::string> commands{"sweep", "hom", "twirl", "audit"};
  if (!commands.count(c.command))
    fail(ErrorCode::kParseError, "config: 'command' must be one of sweep, hom, twirl, audit");
  if (!c.format.empty() && c.format != "csv" && c.format != "json")
    fail(ErrorCode::kParseError, "config: 'format' must be csv or json");
  return c;
}

std::string experiment_config_json(const ExperimentConfig& c) {
  Json out{{"command", c.command},
           {"group", c.group},
           {"target", c.target},
           {"construction", c.construction},
           {"generator", c.generator},
           {"images", c.images},
           {"flip_fraction", c.flip_fraction},
           {"irreps", c.irreps},
           {"d_psi_min", c.d_psi_min},
           {"d_psi_max", c.d_psi_max},
           {"d_rho", c.d_rho},
           {"d_psi", c.d_psi},
           {"seeds", c.seeds},
           {"seed", c.seed},
           {"samples", c.samples},
           {"random_subspace", c.random_subspace},
           {"tolerance", c.tolerance},
           {"format", c.format},
           {"out", c.out}};
  return out.dump(2) + "\n";
}

}  // namespace quasirep
