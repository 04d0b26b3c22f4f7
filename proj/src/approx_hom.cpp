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

#include "quasirep/approx_hom.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "quasirep/approx_rep.hpp"
#include "quasirep/error.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

GroupMap::GroupMap(GroupPtr g, GroupPtr h, std::vector<Element> v)
    : source(std::move(g)), target(std::move(h)), values(std::move(v)) {
  if (!source || !target) fail(ErrorCode::kInvalidArgument, "group map needs both groups");
  if (values.size() != source->order())
    fail(ErrorCode::kInvalidArgument, "group map needs " + std::to_string(source->order()) +
                                          " values, got " + std::to_string(values.size()));
  const std::size_t nh = target->order();
  std::vector<std::size_t> counts(nh, 0);
  for (Element y : values) {
    if (y >= nh) fail(ErrorCode::kInvalidArgument, "map value " + std::to_string(y) + " out of range");
    ++counts[y];
  }
  p_f.resize(nh);
  const double n = static_cast<double>(values.size());
  const double u = 1.0 / static_cast<double>(nh);
  epsilon = 0;
  for (std::size_t y = 0; y < nh; ++y) {
    p_f[y] = static_cast<double>(counts[y]) / n;
    epsilon += (p_f[y] - u) * (p_f[y] - u);
  }
  epsilon *= static_cast<double>(nh);
}

double thm2_term(double epsilon, std::size_t d_sigma, std::size_t d_min) {
  return 0.5 * (1.0 + std::sqrt(epsilon / static_cast<double>(d_sigma)) + dim_ratio_sqrt(d_sigma, d_min));
}

double r_h(const IrrepTable& target_table, std::size_t d_min) {
  const double nh = static_cast<double>(target_table.group().order());
  double s = 0;
  for (const auto& sigma : target_table.irreps()) {
    const double d = static_cast<double>(sigma.dim());
    s += d * d / nh * std::min(dim_ratio_sqrt(sigma.dim(), d_min), 1.0);
  }
  return s;
}

double agreement_probability(const GroupMap& f) {
  const FiniteGroup& g = *f.source;
  const FiniteGroup& h = *f.target;
  const std::size_t n = g.order();
  std::size_t hits = 0;
  for (Element x = 0; x < n; ++x) {
    const Element fx = f(x);
    for (Element y = 0; y < n; ++y)
      if (f(g.mul(x, y)) == h.mul(fx, f(y))) ++hits;
  }
  return static_cast<double>(hits) / (static_cast<double>(n) * static_cast<double>(n));
}

double collision_probability(const GroupMap& f) {
  const std::size_t n = f.source->order();
  std::size_t hits = 0;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (f(x) == f(y)) ++hits;
  return static_cast<double>(hits) / (static_cast<double>(n) * static_cast<double>(n));
}

double regular_collision_gap(const GroupMap& f) {
  const FiniteGroup& h = *f.target;
  const std::size_t nh = h.order();
  // column y of E_x R(f(x)) has mass 1/|G| at row f(x) y for each x
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nh), static_cast<Eigen::Index>(nh));
  const double w = 1.0 / static_cast<double>(f.source->order());
  for (Element x = 0; x < f.source->order(); ++x)
    for (Element y = 0; y < nh; ++y) avg(h.mul(f(x), y), y) += w;
  return (avg.squaredNorm() - 1.0) / static_cast<double>(nh);
}

HomReport evaluate(const GroupMap& f, const IrrepTable& source_table, const IrrepTable& target_table) {
  if (source_table.group().hash() != f.source->hash())
    fail(ErrorCode::kMissingIrrepTable, "no irrep table for the source group " + f.source->name());
  if (target_table.group().hash() != f.target->hash())
    fail(ErrorCode::kMissingIrrepTable, "no irrep table for the target group " + f.target->name());
  if (!source_table.is_complete() || !target_table.is_complete())
    fail(ErrorCode::kIncompleteTable, "homomorphism bounds need complete irrep tables");

  HomReport r;
  r.agreement_prob = agreement_probability(f);
  r.collision_prob = collision_probability(f);
  r.epsilon = f.epsilon;
  r.d_min = source_table.d_min();

  double best = 0;
  for (std::size_t i = 0; i < target_table.size(); ++i) {
    const std::size_t d = target_table[i].dim();
    if (i == 0) continue;  // trivial irrep
    const double t = thm2_term(f.epsilon, d, r.d_min);
    const bool better = !r.thm2_sigma || t < best ||
                        (t == best && d < target_table[*r.thm2_sigma].dim());
    if (better) {
      best = t;
      r.thm2_sigma = i;
    }
  }
  r.thm2_bound = r.thm2_sigma ? std::min(1.0, best) : 1.0;
  r.r_h = r_h(target_table, r.d_min);
  r.thm3_bound = std::min(1.0, (1.0 + f.epsilon) / static_cast<double>(f.target->order()) + r.r_h);
  return r;
}

MatrixFunction lift_through_irrep(const GroupMap& f, const UnitaryRep& sigma) {
  if (sigma.group().hash() != f.target->hash())
    fail(ErrorCode::kInvalidArgument, "irrep does not belong to the target group");
  std::vector<Matrix> out;
  out.reserve(f.values.size());
  for (Element y : f.values) out.push_back(sigma(y));
  return MatrixFunction(f.source, std::move(out));
}

GroupMap random_map(GroupPtr g, GroupPtr h, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(h->order() - 1));
  std::vector<Element> v(g->order());
  for (auto& y : v) y = pick(rng);
  return GroupMap(std::move(g), std::move(h), std::move(v));
}

GroupMap balanced_random_map(GroupPtr g, GroupPtr h, std::uint64_t seed) {
  const std::size_t n = g->order();
  std::vector<Element> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<Element>(k % h->order());
  Rng rng = make_rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return GroupMap(std::move(g), std::move(h), std::move(v));
}

GroupMap genuine_hom(GroupPtr g, GroupPtr h, const std::vector<std::pair<Element, Element>>& images) {
  const std::size_t n = g->order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> v(n, kUnset);
  for (const auto& [x, y] : images)
    if (x >= n || y >= h->order()) fail(ErrorCode::kNotAHomomorphism, "generator image out of range");
  v[g->identity()] = h->identity();
  std::deque<Element> queue{g->identity()};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (const auto& [s, t] : images) {
      const Element xs = g->mul(x, s);
      const Element img = h->mul(v[x], t);
      if (v[xs] == kUnset) {
        v[xs] = img;
        queue.push_back(xs);
      } else if (v[xs] != img) {
        fail(ErrorCode::kNotAHomomorphism, "generator images are inconsistent at element " + std::to_string(xs));
      }
    }
  }
  if (std::find(v.begin(), v.end(), kUnset) != v.end())
    fail(ErrorCode::kNotAHomomorphism, "the listed generators do not generate the source group");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (v[g->mul(x, y)] != h->mul(v[x], v[y]))
        fail(ErrorCode::kNotAHomomorphism, "f(xy) != f(x)f(y) at (" + std::to_string(x) + ", " +
                                               std::to_string(y) + ")");
  return GroupMap(std::move(g), std::move(h), std::move(v));
}

GroupMap identity_map(GroupPtr g, GroupPtr h) {
  if (g->hash() != h->hash()) fail(ErrorCode::kInvalidArgument, "identity map needs identical groups");
  std::vector<Element> v(g->order());
  std::iota(v.begin(), v.end(), Element{0});
  return GroupMap(std::move(g), std::move(h), std::move(v));
}

GroupMap perturbed_hom(const GroupMap& base, double flip_fraction, std::uint64_t seed) {
  if (!(flip_fraction >= 0 && flip_fraction <= 1))
    fail(ErrorCode::kInvalidArgument, "flip fraction must lie in [0, 1]");
  const std::size_t n = base.values.size();
  const std::size_t nh = base.target->order();
  const auto flips = static_cast<std::size_t>(std::llround(flip_fraction * static_cast<double>(n)));
  std::vector<Element> v = base.values;
  if (nh > 1 && flips > 0) {
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    Rng rng = make_rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<Element> shift(1, static_cast<Element>(nh - 1));
    for (std::size_t k = 0; k < flips; ++k) {
      Element& y = v[order[k]];
      y = static_cast<Element>((y + shift(rng)) % nh);
    }
  }
  return GroupMap(base.source, base.target, std::move(v));
}

namespace {

constexpr const char* kMapHeader = "quasirep-map v1";

[[noreturn]] void map_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParseError, "map file line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_map(std::ostream& out, const GroupMap& f) {
  out << kMapHeader << '\n'
      << "source_hash=" << f.source->hash() << '\n'
      << "target_hash=" << f.target->hash() << '\n';
  for (Element y : f.values) out << y << '\n';
}

GroupMap read_map(std::istream& in, GroupPtr g, GroupPtr h) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) map_fail(lineno + 1, std::string("missing ") + what);
    ++lineno;
  };
  next("header");
  if (line != kMapHeader) map_fail(lineno, std::string("expected header '") + kMapHeader + "'");
  next("source hash");
  if (line != "source_hash=" + g->hash()) map_fail(lineno, "source hash does not match the source group");
  next("target hash");
  if (line != "target_hash=" + h->hash()) map_fail(lineno, "target hash does not match the target group");
  std::vector<Element> v(g->order());
  for (auto& y : v) {
    next("map value");
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(line.data(), end, y);
    if (ec != std::errc() || ptr != end || line.empty()) map_fail(lineno, "malformed value '" + line + "'");
    if (y >= h->order()) map_fail(lineno, "value " + line + " out of range");
  }
  if (std::getline(in, line)) map_fail(lineno + 1, "unexpected content after the values");
  return GroupMap(std::move(g), std::move(h), std::move(v));
}

void save_map(const GroupMap& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  write_map(out, f);
  if (!out) fail(ErrorCode::kIoError, "write failed for " + path.string());
}

GroupMap load_map(const std::filesystem::path& path, GroupPtr g, GroupPtr h) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIoError, "cannot open " + path.string());
  return read_map(in, std::move(g), std::move(h));
}

}  // namespace quasirep
