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

// quasirep command-line front end. Talks to the library only through the C
// API in quasirep/quasirep.h.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quasirep/quasirep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct Failure {
  int exit_code;
  std::string message;
};

void check(qr_status s) {
  if (s == QR_OK) return;
  throw Failure{qr_status_is_input_error(s) ? kExitInputError : kExitCheckFailure, qr_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { qr_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(qr_group* g) const { qr_group_free(g); }
};
using Group = std::unique_ptr<qr_group, GroupDeleter>;

struct IrrepsDeleter {
  void operator()(qr_irreps* t) const { qr_irreps_free(t); }
};
using Irreps = std::unique_ptr<qr_irreps, IrrepsDeleter>;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tolerance = 1.0;
  std::string cache_dir;
  std::string format;
  std::string out;

  const char* cache() const { return cache_dir.empty() ? nullptr : cache_dir.c_str(); }
};

std::string resolved_cache_dir(const GlobalOptions& g) {
  if (!g.cache_dir.empty()) return g.cache_dir;
  if (const char* env = std::getenv("QUASIREP_CACHE"); env && *env) return env;
  return ".quasirep";
}

// A group is named by tokens such as "alternating 5", "psl2 7",
// "alternating(5)", "quaternion8" or "file path.grp".
struct GroupRef {
  bool from_file = false;
  std::string text;  // spec or path
};

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<GroupRef> parse_group_refs(const std::vector<std::string>& tokens) {
  std::vector<GroupRef> refs;
  std::vector<std::string> args;
  auto flush = [&] {
    if (refs.empty() || refs.back().from_file || args.empty()) {
      args.clear();
      return;
    }
    std::string& t = refs.back().text;
    t += '(';
    for (std::size_t i = 0; i < args.size(); ++i) t += (i ? "," : "") + args[i];
    t += ')';
    args.clear();
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (is_number(tok)) {
      if (refs.empty() || refs.back().from_file || refs.back().text.find('(') != std::string::npos)
        throw Failure{kExitInputError, "unexpected number '" + tok + "' in group specification"};
      args.push_back(tok);
      continue;
    }
    flush();
    if (tok == "file") {
      if (i + 1 >= tokens.size()) throw Failure{kExitInputError, "'file' needs a path"};
      refs.push_back({true, tokens[++i]});
    } else {
      refs.push_back({false, tok});
    }
  }
  flush();
  return refs;
}

Group open_group(const GroupRef& ref) {
  qr_group* g = nullptr;
  check(ref.from_file ? qr_group_load(ref.text.c_str(), &g) : qr_group_from_spec(ref.text.c_str(), &g));
  return Group(g);
}

Group single_group(const std::vector<std::string>& tokens) {
  const auto refs = parse_group_refs(tokens);
  if (refs.size() != 1) throw Failure{kExitInputError, "expected exactly one group"};
  return open_group(refs.front());
}

Irreps irreps_of(const qr_group* g, const GlobalOptions& opts) {
  qr_irreps* t = nullptr;
  const std::string dir = resolved_cache_dir(opts);
  check(qr_irreps_compute(g, dir.c_str(), opts.seed, opts.tolerance, &t));
  return Irreps(t);
}

void emit(const GlobalOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kExitInputError, "cannot open " + opts.out + " for writing"};
  out << text;
  if (!out) throw Failure{kExitInputError, "write failed for " + opts.out};
}

bool want_json(const GlobalOptions& opts, bool default_json) {
  if (opts.format.empty()) return default_json;
  return opts.format == "json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate representations of finite groups: defects, bounds and twirls"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", qr_version());

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "Seed for every randomized step");
  app.add_option("--samples", opts.samples, "Monte Carlo samples");
  app.add_option("--tolerance", opts.tolerance, "Multiplier applied to every numerical tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", opts.cache_dir, "Cache directory (default $QUASIREP_CACHE or ./.quasirep)");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opts.out, "Write output to this path instead of stdout");

  std::vector<std::string> group_tokens;
  auto* group = app.add_subcommand("group", "Build a group and print its summary");
  group->add_option("spec", group_tokens, "Family and parameters, or 'file <path>'")->required();

  std::vector<std::string> irreps_tokens;
  auto* irreps = app.add_subcommand("irreps", "Decompose a group into irreps");
  irreps->add_option("spec", irreps_tokens, "Group")->required();

  std::vector<std::string> sweep_tokens;
  std::string construction = "minor";
  std::vector<std::size_t> sweep_irreps;
  std::size_t d_psi_min = 1, d_psi_max = static_cast<std::size_t>(-1), seeds = 1;
  bool random_subspace = false;
  auto* sweep = app.add_subcommand("sweep", "Defects of minors or polar minors across d_psi");
  sweep->add_option("spec", sweep_tokens, "Group")->required();
  sweep->add_option("--construction", construction)->check(CLI::IsMember({"minor", "polar"}));
  sweep->add_option("--irrep", sweep_irreps, "Irrep indices (default: every nontrivial irrep)");
  sweep->add_option("--d-psi-min", d_psi_min);
  sweep->add_option("--d-psi-max", d_psi_max);
  sweep->add_option("--seeds", seeds, "Repetitions per (irrep, d_psi)");
  sweep->add_flag("--random-subspace", random_subspace, "Haar-random subspaces for minors");

  std::vector<std::string> hom_tokens;
  std::string generator = "balanced_random", images;
  double flip_fraction = 0;
  std::size_t hom_seeds = 1;
  auto* hom = app.add_subcommand("hom", "Evaluate maps G -> H against the homomorphism ceilings");
  hom->add_option("groups", hom_tokens, "Source and target groups")->required();
  hom->add_option("--generator", generator)
      ->check(CLI::IsMember({"random", "balanced_random", "genuine_hom", "perturbed_hom", "identity"}));
  hom->add_option("--images", images, "Generator images 'g:h,g:h' for genuine_hom and perturbed_hom");
  hom->add_option("--flip-fraction", flip_fraction);
  hom->add_option("--seeds", hom_seeds);

  std::size_t d_rho = 0, d_psi = 0;
  auto* twirl = app.add_subcommand("twirl", "Fourth-moment twirl coefficients");
  twirl->add_option("--d-rho", d_rho)->required();
  twirl->add_option("--d-psi", d_psi)->required();

  std::vector<std::string> audit_tokens;
  std::size_t audit_irrep = 0, audit_d_psi = 0;
  auto* audit = app.add_subcommand("audit", "Error-term audit of a polar construction");
  audit->add_option("spec", audit_tokens, "Group")->required();
  audit->add_option("--irrep", audit_irrep, "Irrep index")->required();
  audit->add_option("--d-psi", audit_d_psi)->required();

  std::string scope = "fast", negative_control;
  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  verify->add_option("scope", scope)->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--negative-control", negative_control, "Deliberately break one check");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run one experiment from a JSON config");
  run->add_option("config", config_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*group) {
      Group g = single_group(group_tokens);
      check(qr_group_cache_store(g.get(), resolved_cache_dir(opts).c_str()));
      char* s = nullptr;
      check(qr_group_summary(g.get(), want_json(opts, false), &s));
      CString text(s);
      emit(opts, text.get());
      return kExitOk;
    }
    if (*irreps) {
      Group g = single_group(irreps_tokens);
      Irreps t = irreps_of(g.get(), opts);
      char* s = nullptr;
      check(qr_irreps_summary(t.get(), want_json(opts, false), &s));
      CString text(s);
      emit(opts, text.get());
      return kExitOk;
    }
    if (*sweep) {
      Group g = single_group(sweep_tokens);
      Irreps t = irreps_of(g.get(), opts);
      qr_sweep_options so{};
      so.construction = construction == "polar" ? QR_POLAR : QR_MINOR;
      so.irreps = sweep_irreps.empty() ? nullptr : sweep_irreps.data();
      so.irrep_count = sweep_irreps.size();
      so.d_psi_min = d_psi_min;
      so.d_psi_max = d_psi_max;
      so.seeds = seeds;
      so.seed = opts.seed;
      so.random_subspace = random_subspace ? 1 : 0;
      char* s = nullptr;
      check(qr_sweep(t.get(), &so, want_json(opts, false), &s));
      CString text(s);
      emit(opts, text.get());
      return kExitOk;
    }
    if (*hom) {
      const auto refs = parse_group_refs(hom_tokens);
      if (refs.size() != 2) throw Failure{kExitInputError, "hom needs a source and a target group"};
      Group g = open_group(refs[0]);
      Group h = open_group(refs[1]);
      Irreps tg = irreps_of(g.get(), opts);
      Irreps th = irreps_of(h.get(), opts);
      qr_hom_options ho{};
      ho.generator = generator.c_str();
      ho.images = images.empty() ? nullptr : images.c_str();
      ho.flip_fraction = flip_fraction;
      ho.seeds = hom_seeds;
      ho.seed = opts.seed;
      char* s = nullptr;
      check(qr_hom(tg.get(), th.get(), &ho, want_json(opts, true), &s));
      CString text(s);
      emit(opts, text.get());
      return kExitOk;
    }
    if (*twirl) {
      char* s = nullptr;
      check(qr_twirl(d_rho, d_psi, opts.samples, opts.seed, &s));
      CString text(s);
      emit(opts, text.get());
      return kExitOk;
    }
    if (*audit) {
      Group g = single_group(audit_tokens);
      Irreps t = irreps_of(g.get(), opts);
      char* s = nullptr;
      check(qr_audit(t.get(), audit_irrep, audit_d_psi, opts.samples ? opts.samples : 2000, opts.seed, &s));
      CString text(s);
      emit(opts, text.get());
      return kExitOk;
    }
    if (*verify) {
      qr_verify_options vo{};
      vo.full = scope == "full" ? 1 : 0;
      vo.seed = opts.seed;
      vo.cache_dir = opts.cache();
      vo.negative_control = negative_control.empty() ? nullptr : negative_control.c_str();
      vo.tolerance_scale = opts.tolerance;
      vo.twirl_samples = opts.samples;
      char* s = nullptr;
      char* failure = nullptr;
      int passed = 0;
      check(qr_verify(&vo, &s, &passed, &failure));
      CString text(s);
      CString failed(failure);
      emit(opts, text.get());
      if (!passed) {
        std::cerr << "verify: check failed: " << failed.get() << '\n';
        return kExitCheckFailure;
      }
      return kExitOk;
    }
    if (*run) {
      std::ifstream in(config_path);
      if (!in) throw Failure{kExitInputError, "cannot open " + config_path};
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string dir = resolved_cache_dir(opts);
      char* s = nullptr;
      check(qr_run_config(buf.str().c_str(), dir.c_str(), &s));
      CString text(s);
      if (*text) emit(opts, text.get());
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
