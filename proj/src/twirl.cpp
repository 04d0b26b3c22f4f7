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

#include "quasirep/twirl.hpp"

#include <algorithm>
#include <cmath>

#include "quasirep/error.hpp"
#include "quasirep/random.hpp"

namespace quasirep {

namespace {

S4Data build_s4() {
  S4Data s;
  Perm4 p{0, 1, 2, 3};
  std::size_t k = 0;
  do {
    s.elements[k++] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  s.representatives = {Perm4{0, 1, 2, 3}, Perm4{1, 0, 2, 3}, Perm4{1, 2, 0, 3},
                       Perm4{1, 0, 3, 2}, Perm4{1, 2, 3, 0}};
  s.class_sizes.fill(0);
  for (std::size_t i = 0; i < kS4Order; ++i) {
    s.class_of[i] = s4_class(s.elements[i]);
    ++s.class_sizes[s.class_of[i]];
  }
  for (std::size_t c = 0; c < kS4Classes; ++c) s.cycles[c] = cycle_count(s.representatives[c]);
  s.partitions = {std::vector<int>{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  s.irrep_dims = {1, 3, 2, 3, 1};
  s.characters = {{{1, 1, 1, 1, 1},
                   {3, 1, 0, -1, -1},
                   {2, 0, -1, 2, 0},
                   {3, -1, 0, -1, 1},
                   {1, -1, 1, 1, -1}}};
  return s;
}

double ipow(double base, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_twirl_dims(std::size_t d_rho, std::size_t d_psi) {
  if (d_rho < 4)
    fail(ErrorCode::kDegenerateDimension,
         "permutation operators are linearly dependent for d_rho = " + std::to_string(d_rho) + " < 4");
  if (d_psi < 1 || d_psi > d_rho) fail(ErrorCode::kDimensionError, "twirl needs 1 <= d_psi <= d_rho");
}

}  // namespace

const S4Data& S4Data::get() {
  static const S4Data data = build_s4();
  return data;
}

std::string_view s4_class_name(std::size_t c) {
  static constexpr std::array<std::string_view, kS4Classes> names{"e", "(12)", "(123)", "(12)(34)", "(1234)"};
  return names.at(c);
}

int cycle_count(const Perm4& p) {
  std::array<bool, 4> seen{};
  int c = 0;
  for (int i = 0; i < 4; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

int transposition_distance(const Perm4& p) { return 4 - cycle_count(p); }

std::size_t s4_class(const Perm4& p) {
  switch (cycle_count(p)) {
    case 4: return 0;
    case 3: return 1;
    case 1: return 4;
    default: break;
  }
  // two cycles: a 3-cycle has a fixed point, a double transposition has none
  for (int i = 0; i < 4; ++i)
    if (p[i] == i) return 2;
  return 3;
}

Perm4 compose(const Perm4& p, const Perm4& q) {
  Perm4 r{};
  for (int k = 0; k < 4; ++k) r[k] = p[q[k]];
  return r;
}

Perm4 inverse(const Perm4& p) {
  Perm4 r{};
  for (std::uint8_t k = 0; k < 4; ++k) r[p[k]] = k;
  return r;
}

std::uint64_t tableau_count(const std::vector<int>& lambda, std::uint64_t d) {
  // conjugate partition gives column lengths for the hooks
  std::vector<int> cols(lambda.empty() ? 0 : lambda.front(), 0);
  for (int row : lambda)
    for (int j = 0; j < row; ++j) ++cols[j];
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const long long content = static_cast<long long>(j) - static_cast<long long>(i);
      const long long factor = static_cast<long long>(d) + content;
      if (factor <= 0) return 0;
      num *= static_cast<unsigned __int128>(factor);
      den *= static_cast<unsigned __int128>((lambda[i] - j - 1) + (cols[j] - static_cast<int>(i) - 1) + 1);
    }
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t moment_trace(const Perm4& sigma, std::uint64_t d_psi) {
  std::uint64_t r = 1;
  for (int i = 0; i < cycle_count(sigma); ++i) r *= d_psi;
  return r;
}

TwirlExpansion twirl_exact(std::size_t d_rho, std::size_t d_psi) {
  check_twirl_dims(d_rho, d_psi);
  const S4Data& s4 = S4Data::get();
  TwirlExpansion t{d_rho, d_psi, {}};
  std::array<double, kS4Classes> ratio{};
  for (std::size_t l = 0; l < kS4Classes; ++l)
    ratio[l] = static_cast<double>(tableau_count(s4.partitions[l], d_psi)) /
               static_cast<double>(tableau_count(s4.partitions[l], d_rho));
  for (std::size_t c = 0; c < kS4Classes; ++c) {
    double v = 0;
    for (std::size_t l = 0; l < kS4Classes; ++l) v += s4.irrep_dims[l] * s4.characters[l][c] * ratio[l];
    t.coefficients[c] = v / static_cast<double>(kS4Order);
  }
  return t;
}

double twirl_contraction(const TwirlExpansion& t, const Perm4& sigma) {
  const S4Data& s4 = S4Data::get();
  double v = 0;
  for (std::size_t i = 0; i < kS4Order; ++i) {
    const Perm4& pi = s4.elements[i];
    v += t.coefficients[s4.class_of[i]] *
         ipow(static_cast<double>(t.d_rho), cycle_count(compose(sigma, inverse(pi))));
  }
  return v;
}

Eigen::MatrixXd collapsed_gram(std::size_t d_rho) {
  const S4Data& s4 = S4Data::get();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(kS4Classes, kS4Classes);
  for (std::size_t s = 0; s < kS4Classes; ++s)
    for (std::size_t i = 0; i < kS4Order; ++i)
      g(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s4.class_of[i])) +=
          ipow(static_cast<double>(d_rho), cycle_count(compose(s4.representatives[s], inverse(s4.elements[i]))));
  return g;
}

TwirlMonteCarlo twirl_monte_carlo(std::size_t d_rho, std::size_t d_psi, std::size_t samples,
                                  std::uint64_t seed, const Tolerances& tol) {
  check_twirl_dims(d_rho, d_psi);
  if (d_rho > 14) fail(ErrorCode::kDimensionError, "twirl Monte Carlo supports d_rho <= 14");
  if (samples < 2) fail(ErrorCode::kInvalidArgument, "twirl Monte Carlo needs at least 2 samples");
  const S4Data& s4 = S4Data::get();
  const auto n = static_cast<Eigen::Index>(d_rho);
  const auto k = static_cast<Eigen::Index>(d_psi);
  const std::size_t blocks = d_rho / 4;

  std::array<double, kS4Order> sum{}, sum2{};
  std::array<double, kS4Classes> trace_sum{};
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng = make_rng(seed, s);
    const Matrix u = haar_unitary(rng, n);
    // P = U^dag Pi U with Pi the projector onto the first d_psi coordinates
    const Matrix top = u.topRows(k);
    const Matrix p = top.adjoint() * top;

    for (std::size_t i = 0; i < kS4Order; ++i) {
      const Perm4& pi = s4.elements[i];
      double block_mean = 0;
      for (std::size_t b = 0; b < blocks; ++b) {
        const auto base = static_cast<Eigen::Index>(4 * b);
        Complex prod = 1;
        for (int q = 0; q < 4; ++q) prod *= p(base + q, base + pi[q]);
        block_mean += prod.real();
      }
      block_mean /= static_cast<double>(blocks);
      sum[i] += block_mean;
      sum2[i] += block_mean * block_mean;
    }

    // tr(P^{(x)4} sigma^{-1}) is a product of tr(P^len) over cycles
    std::array<Complex, 5> powers{};
    Matrix acc = Matrix::Identity(n, n);
    for (int len = 1; len <= 4; ++len) {
      acc = acc * p;
      powers[len] = acc.trace();
    }
    for (std::size_t c = 0; c < kS4Classes; ++c) {
      const Perm4 inv = inverse(s4.representatives[c]);
      std::array<bool, 4> seen{};
      Complex v = 1;
      for (int i = 0; i < 4; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = inv[j]) {
          seen[j] = true;
          ++len;
        }
        v *= powers[len];
      }
      trace_sum[c] += v.real();
    }
  }

  TwirlMonteCarlo mc;
  mc.samples = samples;
  mc.seed = seed;
  mc.expansion.d_rho = d_rho;
  mc.expansion.d_psi = d_psi;
  const double ns = static_cast<double>(samples);
  for (std::size_t i = 0; i < kS4Order; ++i) {
    const double mean = sum[i] / ns;
    const double var = std::max(0.0, (sum2[i] - ns * mean * mean) / (ns - 1));
    mc.raw[i] = mean;
    mc.raw_stderr[i] = std::sqrt(var / ns);
  }
  for (std::size_t c = 0; c < kS4Classes; ++c) {
    const auto it = std::find(s4.elements.begin(), s4.elements.end(), s4.representatives[c]);
    const auto i = static_cast<std::size_t>(it - s4.elements.begin());
    mc.expansion.coefficients[c] = mc.raw[i];
    mc.standard_errors[c] = mc.raw_stderr[i];
    mc.trace_moments[c] = trace_sum[c] / ns;
  }

  const Eigen::MatrixXd g = collapsed_gram(d_rho);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  mc.gram_condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(mc.gram_condition <= tol.gram_condition))
    fail(ErrorCode::kIllConditionedGram, "Gram condition number " + std::to_string(mc.gram_condition));
  Eigen::VectorXd rhs(kS4Classes);
  for (std::size_t c = 0; c < kS4Classes; ++c) rhs(static_cast<Eigen::Index>(c)) = mc.trace_moments[c];
  const Eigen::VectorXd sol = svd.solve(rhs);
  for (std::size_t c = 0; c < kS4Classes; ++c) mc.gram_coefficients[c] = sol(static_cast<Eigen::Index>(c));
  return mc;
}

double error_term_expansion(const UnitaryRep& rho, const TwirlExpansion& t) {
  const S4Data& s4 = S4Data::get();
  const FiniteGroup& g = rho.group();
  // positions 0..3 carry rho^dag, rho, rho^dag, rho
  static constexpr std::array<int, 4> exponent{-1, 1, -1, 1};
  double total = 0;
  for (std::size_t i = 0; i < kS4Order; ++i) {
    const Perm4 inv = inverse(s4.elements[i]);
    // chain successor k -> pi^{-1}(k + 1); each cycle multiplies commuting powers of rho(x)
    std::vector<int> cycle_exponents;
    std::array<bool, 4> seen{};
    for (int a = 0; a < 4; ++a) {
      if (seen[a]) continue;
      int e = 0;
      for (int j = a; !seen[j]; j = inv[(j + 1) % 4]) {
        seen[j] = true;
        e += exponent[j];
      }
      cycle_exponents.push_back(e);
    }
    Complex avg = 0;
    for (Element x = 0; x < g.order(); ++x) {
      Complex v = 1;
      for (int e : cycle_exponents) v *= rho.character(g.power(x, e));
      avg += v;
    }
    total += t.coefficients[s4.class_of[i]] * (avg / static_cast<double>(g.order())).real();
  }
  return total;
}

ErrorTermAudit error_term_audit(const UnitaryRep& rho, std::size_t d_psi, std::size_t samples,
                                std::uint64_t seed) {
  const std::size_t d = rho.dim();
  const TwirlExpansion t = twirl_exact(d, d_psi);
  const FiniteGroup& g = rho.group();
  const auto n = static_cast<Eigen::Index>(d);
  const auto k = static_cast<Eigen::Index>(d_psi);
  if (samples < 2) fail(ErrorCode::kInvalidArgument, "audit needs at least 2 samples");

  ErrorTermAudit a;
  a.d_rho = d;
  a.d_psi = d_psi;
  a.samples = samples;
  a.seed = seed;
  const double r = static_cast<double>(d_psi) / static_cast<double>(d);
  a.leading = static_cast<double>(d) * r * r * r * (2 - r);
  a.expansion = error_term_expansion(rho, t);

  for (Element x = 0; x < g.order(); ++x) {
    const Complex c1 = rho.character(x);
    const Complex c2 = rho.character(g.mul(x, x));
    a.second_moment += std::norm(c1);
    a.fourth_moment += std::norm(c1) * std::norm(c1);
    a.square_moment += std::norm(c2);
    a.mixed_moment += (std::conj(c2) * c1 * c1).real();
  }
  const double ng = static_cast<double>(g.order());
  a.second_moment /= ng;
  a.fourth_moment /= ng;
  a.square_moment /= ng;
  a.mixed_moment /= ng;

  double sum = 0, sum2 = 0;
  Matrix left(n, n), right(n, n);
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng = make_rng(seed, s);
    const Matrix u = haar_unitary(rng, n);
    const Matrix top = u.topRows(k);
    const Matrix p = top.adjoint() * top;
    double v = 0;
    for (Element x = 0; x < g.order(); ++x) {
      left.noalias() = p * rho(x).adjoint();
      right.noalias() = p * rho(x);
      const Matrix half = left * right;
      v += (half * half).trace().real();
    }
    v /= ng;
    sum += v;
    sum2 += v * v;
  }
  const double ns = static_cast<double>(samples);
  a.monte_carlo = sum / ns;
  a.monte_carlo_stderr = std::sqrt(std::max(0.0, (sum2 - ns * a.monte_carlo * a.monte_carlo) / (ns - 1)) / ns);
  return a;
}

}  // namespace quasirep
