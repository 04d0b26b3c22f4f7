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

#include "quasirep/verify.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>
#include <memory>

#include "json.hpp"
#include "quasirep/approx_hom.hpp"
#include "quasirep/approx_rep.hpp"
#include "quasirep/cache.hpp"
#include "quasirep/error.hpp"
#include "quasirep/fourier.hpp"
#include "quasirep/random.hpp"
#include "quasirep/twirl.hpp"
#include "quasirep/version.hpp"

namespace quasirep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double relative_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// Groups and irrep tables shared by the criteria of one run.
class Context {
 public:
  explicit Context(const VerifyOptions& opts) : opts_(opts) {}

  const VerifyOptions& opts() const { return opts_; }

  GroupPtr group(const std::string& spec) {
    auto it = groups_.find(spec);
    if (it != groups_.end()) return it->second;
    auto g = std::make_shared<const FiniteGroup>(named_group(spec));
    groups_.emplace(spec, g);
    return g;
  }

  const IrrepTable& table(const std::string& spec) {
    auto it = tables_.find(spec);
    if (it != tables_.end()) return *it->second;
    GroupPtr g = group(spec);
    std::unique_ptr<IrrepTable> t;
    if (opts_.cache_dir)
      t = std::make_unique<IrrepTable>(Cache(*opts_.cache_dir).load_or_decompose(g, opts_.seed, opts_.tolerances));
    else
      t = std::make_unique<IrrepTable>(decompose(g, opts_.seed, opts_.tolerances));
    return *tables_.emplace(spec, std::move(t)).first->second;
  }

  /// Seed for task `k` of criterion `id`.
  std::uint64_t seed(int id, std::uint64_t k) const {
    return derive_seed(derive_seed(opts_.seed, static_cast<std::uint64_t>(id)), k);
  }

 private:
  VerifyOptions opts_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::unique_ptr<IrrepTable>> tables_;
};

class Recorder {
 public:
  explicit Recorder(CheckRecord& rec) : rec_(rec) {}

  bool at_most(const std::string& name, double measured, double bound) {
    return add(name, measured, bound, "<=", measured <= bound);
  }
  bool at_least(const std::string& name, double measured, double bound) {
    return add(name, measured, bound, ">=", measured >= bound);
  }
  bool equals(const std::string& name, double measured, double expected) {
    return add(name, measured, expected, "==", measured == expected);
  }

 private:
  bool add(const std::string& name, double measured, double bound, const char* rel, bool ok) {
    rec_.measurements.push_back({name, measured, bound, rel, ok});
    return ok;
  }
  CheckRecord& rec_;
};

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

void a1(Context& ctx, CheckRecord& rec) {
  rec.name = "irrep completeness";
  rec.time_limit = 60;
  Recorder r(rec);
  const Tolerances& tol = ctx.opts().tolerances;
  for (const char* spec : {"cyclic(12)", "symmetric(3)", "dihedral(4)", "quaternion8", "alternating(5)",
                           "alternating(6)", "psl2(7)"}) {
    const IrrepTable& t = ctx.table(spec);
    const std::string g = t.group().name();
    std::size_t sum = 0;
    double unit = 0, hom = 0, id = 0;
    for (const auto& rho : t.irreps()) {
      sum += rho.dim() * rho.dim();
      const RepResiduals res = representation_residuals(rho, tol);
      unit = std::max(unit, res.unitarity);
      hom = std::max(hom, res.homomorphism);
      id = std::max(id, res.identity);
    }
    r.equals(g + " sum d^2", static_cast<double>(sum), static_cast<double>(t.group().order()));
    r.equals(g + " irrep count", static_cast<double>(t.size()), static_cast<double>(t.group().class_count()));
    r.at_most(g + " unitarity residual", unit, 1e-8);
    r.at_most(g + " homomorphism residual", hom, 1e-8);
    r.at_most(g + " identity residual", id, 1e-8);
    r.at_most(g + " schur orthogonality", schur_orthogonality_residual(t), 1e-7);
    rec.detail += g + " dims " + dims_string(t.dims()) + "; ";
  }
  const auto expect = [&](const char* spec, std::vector<std::size_t> want, std::size_t dmin) {
    const IrrepTable& t = ctx.table(spec);
    r.equals(t.group().name() + " dims match", t.dims() == want ? 1.0 : 0.0, 1.0);
    r.equals(t.group().name() + " d_min", static_cast<double>(t.d_min()), static_cast<double>(dmin));
  };
  expect("alternating(5)", {1, 3, 3, 4, 5}, 3);
  expect("alternating(6)", {1, 5, 5, 8, 8, 9, 10}, 5);
}

void a2(Context& ctx, CheckRecord& rec) {
  rec.name = "Fourier round trip and Plancherel";
  Recorder r(rec);
  const IrrepTable& t = ctx.table("psl2(7)");
  Rng rng = make_rng(ctx.seed(2, 0));
  const Matrix v = gaussian_matrix(rng, static_cast<Eigen::Index>(t.group().order()), 1);
  ScalarFunction f{t.group_ptr(), std::vector<Complex>(v.data(), v.data() + v.size())};
  const ScalarSpectrum s = transform_scalar(f, t);
  const ScalarFunction back = invert_scalar(s, t);
  double sup = 0;
  for (std::size_t x = 0; x < f.values.size(); ++x) sup = std::max(sup, std::abs(back.values[x] - f.values[x]));
  r.at_most("inversion sup error", sup, 1e-10);
  PlancherelSides p = plancherel_check(f, s, t);
  if (ctx.opts().negative_control == "plancherel") p.rhs /= static_cast<double>(t.group().order());
  r.at_most("plancherel relative error", std::abs(p.lhs - p.rhs) / p.lhs, 1e-8);
}

void a3(Context& ctx, CheckRecord& rec) {
  rec.name = "defect oracle equivalence";
  Recorder r(rec);
  const IrrepTable& t = ctx.table("alternating(5)");
  double worst = 0, worst_triple = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    const MatrixFunction psi = random_admissible(t.group_ptr(), 1 + k % 3, ctx.seed(3, k));
    const DefectReport a = defect_direct(psi, t.d_min(), ctx.opts().tolerances);
    const DefectReport b = defect_via_fourier(psi, t, ctx.opts().tolerances);
    worst = std::max(worst, relative_diff(a.defect, b.defect));
    worst_triple = std::max(worst_triple, std::abs(a.triple_trace - b.triple_trace) /
                                              std::max(std::abs(a.triple_trace), 1e-300));
  }
  r.at_most("max relative defect difference", worst, 1e-7);
  r.at_most("max relative triple trace difference", worst_triple, 1e-7);
}

void a4(Context& ctx, CheckRecord& rec) {
  rec.name = "minor defect exactness";
  Recorder r(rec);
  double worst = 0;
  std::size_t cases = 0;
  for (const char* spec : {"alternating(5)", "psl2(7)"}) {
    const IrrepTable& t = ctx.table(spec);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t d = 1; d <= t[i].dim(); ++d)
        for (int haar = 0; haar < 2; ++haar) {
          const SubspaceChoice choice = haar ? SubspaceChoice(HaarSubspace{ctx.seed(4, cases)})
                                             : SubspaceChoice(LeadingSubspace{});
          const MatrixFunction psi = minor_construction(t[i], d, choice, ctx.opts().tolerances);
          const double defect = defect_direct(psi, t.d_min(), ctx.opts().tolerances).defect;
          worst = std::max(worst, std::abs(defect - minor_defect(d, t[i].dim())));
          ++cases;
        }
  }
  r.at_most("max |defect - 2d(1 - sqrt(d/d_rho))|", worst, 1e-7);
  r.at_least("cases", static_cast<double>(cases), 1);
  const IrrepTable& a5 = ctx.table("alternating(5)");
  const MatrixFunction spot = minor_construction(a5[4], 3, LeadingSubspace{}, ctx.opts().tolerances);
  const double v = defect_direct(spot, a5.d_min(), ctx.opts().tolerances).defect;
  r.at_most("A5 rho=5 d=3 spot value vs 6(1 - sqrt 0.6)", std::abs(v - 6 * (1 - std::sqrt(0.6))), 1e-6);
  rec.detail = "spot defect " + std::to_string(v);
}

// One psi for the dominance corpus.
struct CorpusCase {
  std::string label;
  MatrixFunction psi;
  std::size_t d_min;
};

std::vector<CorpusCase> dominance_corpus(Context& ctx) {
  std::vector<CorpusCase> out;
  std::uint64_t k = 0;
  const Tolerances& tol = ctx.opts().tolerances;
  for (const char* spec : {"alternating(5)", "psl2(7)"}) {
    const IrrepTable& t = ctx.table(spec);
    const std::string g = t.group().name();
    for (std::size_t i = 1; i < t.size(); ++i)
      for (std::size_t d = 1; d <= t[i].dim(); ++d)
        out.push_back({g + " minor", minor_construction(t[i], d, LeadingSubspace{}, tol), t.d_min()});
    for (std::size_t i = 1; i < t.size(); ++i)
      for (double s : {0.05, 0.3, 1.0})
        out.push_back({g + " perturbed irrep", perturbed_irrep(t[i], s, ctx.seed(5, k++)), t.d_min()});
    for (std::size_t d = 1; d <= 3; ++d)
      for (int s = 0; s < 2; ++s)
        out.push_back({g + " haar", haar_baseline(t.group_ptr(), d, ctx.seed(5, k++)), t.d_min()});
    for (int s = 0; s < 4; ++s)
      out.push_back({g + " sign", random_sign_function(t.group_ptr(), ctx.seed(5, k++)), t.d_min()});
    const UnitaryRep& top = t[t.size() - 1];
    for (std::size_t d = 2; d < top.dim(); ++d)
      out.push_back({g + " polar", polar_construction(top, d, ctx.seed(5, k++), tol).polar, t.d_min()});
  }
  const IrrepTable& a6 = ctx.table("alternating(6)");
  for (std::size_t i = 1; i < a6.size(); i += 2)
    out.push_back({"A6 minor", minor_construction(a6[i], a6[i].dim() / 2, HaarSubspace{ctx.seed(5, k++)}, tol),
                   a6.d_min()});
  for (std::size_t d : {6, 9})
    out.push_back({"A6 polar", polar_construction(a6[a6.size() - 1], d, ctx.seed(5, k++), tol).polar, a6.d_min()});
  for (int s = 0; s < 3; ++s)
    out.push_back({"A6 sign", random_sign_function(a6.group_ptr(), ctx.seed(5, k++)), a6.d_min()});
  out.push_back({"A6 haar", haar_baseline(a6.group_ptr(), 2, ctx.seed(5, k++)), a6.d_min()});
  return out;
}

void a5(Context& ctx, CheckRecord& rec) {
  rec.name = "defect and agreement dominance";
  Recorder r(rec);
  const auto corpus = dominance_corpus(ctx);
  double min_gap = INFINITY, max_excess = -INFINITY;
  std::size_t v1 = 0, v2 = 0;
  for (const auto& c : corpus) {
    const DefectReport rep = defect_direct(c.psi, c.d_min, ctx.opts().tolerances);
    const double gap = rep.defect - rep.thm1_bound;
    const double excess = rep.agreement_prob - rep.cor1_bound;
    if (gap < -1e-9) {
      ++v1;
      rec.detail += c.label + " violates the defect bound; ";
    }
    if (excess > 1e-9) {
      ++v2;
      rec.detail += c.label + " violates the agreement bound; ";
    }
    min_gap = std::min(min_gap, gap);
    max_excess = std::max(max_excess, excess);
  }
  r.at_least("corpus size", static_cast<double>(corpus.size()), 100);
  r.at_least("min defect - thm1_bound", min_gap, -1e-9);
  r.at_most("max agreement - cor1_bound", max_excess, 1e-9);
  r.equals("violations", static_cast<double>(v1 + v2), 0);
}

void a6(Context& ctx, CheckRecord& rec) {
  rec.name = "random sign functions";
  Recorder r(rec);
  const IrrepTable& t = ctx.table("alternating(6)");
  double lo = 1, hi = 0, excess = -INFINITY;
  for (std::size_t k = 0; k < 20; ++k) {
    const MatrixFunction psi = random_sign_function(t.group_ptr(), ctx.seed(6, k));
    const DefectReport rep = defect_direct(psi, t.d_min(), ctx.opts().tolerances);
    lo = std::min(lo, rep.agreement_prob);
    hi = std::max(hi, rep.agreement_prob);
    excess = std::max(excess, rep.agreement_prob - rep.cor1_bound);
  }
  r.at_least("min agreement", lo, 0.45);
  r.at_most("max agreement", hi, 0.55);
  r.at_most("max agreement", hi, 0.5 * (1 + std::sqrt(0.2)) + 1e-9);
  r.at_most("max agreement - cor1_bound", excess, 1e-9);
}

void a7(Context& ctx, CheckRecord& rec) {
  rec.name = "homomorphism ceilings";
  Recorder r(rec);
  const IrrepTable& a6 = ctx.table("alternating(6)");
  const IrrepTable& s3 = ctx.table("symmetric(3)");
  double e2 = -INFINITY, e3 = -INFINITY, max_agree = 0, max_eps = 0;
  for (std::size_t k = 0; k < 10; ++k) {
    const GroupMap f = balanced_random_map(a6.group_ptr(), s3.group_ptr(), ctx.seed(7, k));
    const HomReport h = evaluate(f, a6, s3);
    e2 = std::max(e2, h.agreement_prob - h.thm2_bound);
    e3 = std::max(e3, h.agreement_prob - h.thm3_bound);
    max_agree = std::max(max_agree, h.agreement_prob);
    max_eps = std::max(max_eps, f.epsilon);
  }
  r.at_most("max agreement - thm2_bound", e2, 1e-9);
  r.at_most("max agreement - thm3_bound", e3, 1e-9);
  // ceiling with the S3 value of R_H at d_min = 3, a weaker form of thm3
  r.at_most("max agreement vs (1+eps)/6 + 0.73678", max_agree, (1 + max_eps) / 6 + 0.73678);
  r.at_most("epsilon of balanced maps", max_eps, 0);
  r.at_most("R_S3(3) vs hand sum", std::abs(r_h(s3, 3) - (2 * std::sqrt(1.0 / 3) + 4 * std::sqrt(2.0 / 3)) / 6),
            1e-12);

  const IrrepTable& a5 = ctx.table("alternating(5)");
  const HomReport id = evaluate(identity_map(a5.group_ptr(), a5.group_ptr()), a5, a5);
  r.equals("identity agreement", id.agreement_prob, 1);
  r.at_most("|identity thm2_bound - 1|", std::abs(id.thm2_bound - 1), 1e-12);
}

void a8(Context& ctx, CheckRecord& rec) {
  rec.name = "twirl consistency";
  rec.time_limit = 600;
  Recorder r(rec);
  const TwirlExpansion ex = twirl_exact(6, 3);
  const TwirlMonteCarlo mc = twirl_monte_carlo(6, 3, ctx.opts().twirl_samples, ctx.seed(8, 0), ctx.opts().tolerances);
  for (std::size_t c = 0; c < kS4Classes; ++c) {
    const std::string name(s4_class_name(c));
    r.at_most("upsilon" + name + " |mc - exact| / stderr", std::abs(mc.expansion.coefficients[c] - ex.coefficients[c]) /
                                                           mc.standard_errors[c], 3);
    r.at_most("upsilon" + name + " gram solve vs exact", std::abs(mc.gram_coefficients[c] - ex.coefficients[c]), 1e-9);
  }
  const TwirlExpansion triv = twirl_exact(6, 6);
  const TwirlMonteCarlo triv_mc = twirl_monte_carlo(6, 6, 100, ctx.seed(8, 1), ctx.opts().tolerances);
  r.at_most("trivial |upsilon(e) - 1|", std::abs(triv.coefficients[0] - 1), 1e-12);
  r.at_most("trivial monte carlo |upsilon(e) - 1|", std::abs(triv_mc.expansion.coefficients[0] - 1), 1e-12);
  for (std::size_t c = 1; c < kS4Classes; ++c) {
    r.at_most("trivial |upsilon" + std::string(s4_class_name(c)) + "|", std::abs(triv.coefficients[c]), 1e-12);
    r.at_most("trivial monte carlo |upsilon" + std::string(s4_class_name(c)) + "|",
              std::abs(triv_mc.expansion.coefficients[c]), 1e-12);
  }
  const S4Data& s4 = S4Data::get();
  for (std::size_t c = 0; c < kS4Classes; ++c) {
    double lo = INFINITY, hi = 0;
    for (std::size_t d : {8, 10, 12}) {
      const double v = std::abs(twirl_exact(d, d / 2).coefficients[c]) *
                       std::pow(static_cast<double>(d), transposition_distance(s4.representatives[c]));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    r.at_most("scaling spread max/min upsilon" + std::string(s4_class_name(c)) + " d^t", lo > 0 ? hi / lo : INFINITY,
              2);
  }
}

void a9(Context& ctx, CheckRecord& rec) {
  rec.name = "polar minor defect";
  Recorder r(rec);
  const IrrepTable& t = ctx.table("alternating(6)");
  const UnitaryRep* rho = nullptr;
  for (const auto& x : t.irreps())
    if (x.dim() == 10) rho = &x;
  if (!rho) fail(ErrorCode::kToleranceViolation, "A6 has no 10-dimensional irrep in this table");
  double sum = 0, worst_residual = 0;
  const std::size_t seeds = 20;
  for (std::size_t k = 0; k < seeds; ++k) {
    const PolarMinor pm = polar_construction(*rho, 9, ctx.seed(9, k), ctx.opts().tolerances);
    sum += defect_direct(pm.polar, t.d_min(), ctx.opts().tolerances).normalized_defect;
    worst_residual = std::max(worst_residual, pm.polar_residual());
  }
  const double mean = sum / static_cast<double>(seeds);
  r.at_most("mean normalized defect vs 1.15 x bound", mean, polar_normalized_bound(0.9) * 1.15);
  r.at_most("mean normalized defect", mean, std::nextafter(1.0, 0.0));
  r.at_most("max polar residual", worst_residual, 9 * 0.1 * 1.15 + 1);
}

void a10(Context&, CheckRecord& rec) {
  rec.name = "threshold identity";
  Recorder r(rec);
  const double ratio = polar_threshold_ratio();
  r.at_most("|4(1 - sqrt r) + 6(1 - r) - 1|", std::abs(polar_normalized_bound(ratio) - 1), 1e-12);
  r.at_most("|r - 0.876|", std::abs(ratio - 0.876), 5e-4);
  rec.detail = "r = " + std::to_string(ratio);
}

void run_into(int id, Context& ctx, CheckRecord& rec) {
  static const std::map<int, std::function<void(Context&, CheckRecord&)>> fns{
      {1, a1}, {2, a2}, {3, a3}, {4, a4}, {5, a5}, {6, a6}, {7, a7}, {8, a8}, {9, a9}, {10, a10}};
  const auto it = fns.find(id);
  if (it == fns.end()) fail(ErrorCode::kInvalidArgument, "no criterion A" + std::to_string(id));
  rec.id = "A" + std::to_string(id);
  const auto t0 = Clock::now();
  try {
    it->second(ctx, rec);
    rec.passed = !rec.measurements.empty();
    for (const auto& m : rec.measurements) rec.passed = rec.passed && m.passed;
  } catch (const Error& e) {
    rec.passed = false;
    rec.detail += std::string("error: ") + e.what();
  }
  rec.seconds = seconds_since(t0);
  if (rec.time_limit > 0 && rec.seconds > rec.time_limit) {
    rec.passed = false;
    rec.detail += " runtime over the limit;";
  }
}

}  // namespace

std::vector<int> criteria_in(Scope scope) {
  if (scope == Scope::kFast) return {1, 2, 3, 4, 5, 6, 7};
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

CheckRecord run_criterion(int id, const VerifyOptions& opts) {
  Context ctx(opts);
  CheckRecord rec;
  run_into(id, ctx, rec);
  return rec;
}

bool RunManifest::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string RunManifest::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.id + " " + c.name;
  return {};
}

RunManifest run_verify(Scope scope, const VerifyOptions& opts) {
  RunManifest m;
  m.version = kVersion;
  m.scope = scope;
  m.options = opts;
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  m.timestamp = buf;
  const auto t0 = Clock::now();
  Context ctx(opts);
  for (int id : criteria_in(scope)) {
    CheckRecord rec;
    run_into(id, ctx, rec);
    m.checks.push_back(std::move(rec));
  }
  m.wall_clock_seconds = seconds_since(t0);
  return m;
}

std::string manifest_json(const RunManifest& m) {
  using Json = nlohmann::ordered_json;
  Json checks = Json::array();
  Json timing{{"timestamp", m.timestamp}, {"wall_clock_seconds", m.wall_clock_seconds}};
  Json per = Json::object();
  for (const auto& c : m.checks) {
    Json ms = Json::array();
    for (const auto& x : c.measurements)
      ms.push_back({{"name", x.name},
                    {"measured", x.measured},
                    {"bound", x.bound},
                    {"relation", x.relation},
                    {"passed", x.passed}});
    checks.push_back({{"id", c.id},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"measurements", ms},
                      {"detail", c.detail}});
    Json t{{"seconds", c.seconds}};
    if (c.time_limit > 0) t["limit_seconds"] = c.time_limit;
    per[c.id] = t;
  }
  timing["checks"] = per;
  Json config{{"scope", m.scope == Scope::kFast ? "fast" : "full"},
              {"seed", m.options.seed},
              {"twirl_samples", m.options.twirl_samples},
              {"cache_dir", m.options.cache_dir ? Json(m.options.cache_dir->string()) : Json(nullptr)},
              {"negative_control", m.options.negative_control}};
  Json out{{"tool", "quasirep"},
           {"version", m.version},
           {"config", config},
           {"passed", m.passed()},
           {"first_failure", m.first_failure()},
           {"checks", checks},
           {"timing", timing}};
  return out.dump(2) + "\n";
}

}  // namespace quasirep
