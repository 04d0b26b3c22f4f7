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

#ifndef QUASIREP_CONFIG_HPP
#define QUASIREP_CONFIG_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace quasirep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Every numerical threshold used by the library, in one place.
///
/// Library entry points take a `const Tolerances&` defaulting to
/// `default_tolerances()`. The CLI `--tolerance` flag builds a scaled copy.
struct Tolerances {
  double unit = 1e-9;             // identity and homomorphism residual of irreps
  double unitarity = 1e-8;        // ||M^dag M - 1||_F per matrix
  double irreducibility = 1e-6;   // |E|chi|^2 - 1|
  double character_match = 1e-6;  // dedup of characters, max-abs per class
  double eigen_cluster = 1e-7;    // relative to ||T||_op
  double frobenius_schur = 1e-6;
  double admissibility = 1e-8;    // ||E psi^dag psi - P||_F
  double agreement = 1e-9;        // ||psi(xy) - psi(x)psi(y)||_F counted as equal
  double rank = 1e-10;            // smallest singular value accepted by polar
  double gram_condition = 1e10;

  std::size_t decomposition_retries = 8;
  std::size_t polar_retries = 8;
  std::size_t associativity_exhaustive_max = 512;
  std::size_t associativity_samples = 100000;
  std::size_t closure_cap = 5000;
  std::size_t decomposition_cap = 700;
  std::size_t homomorphism_exhaustive_max = 128;
  std::size_t homomorphism_samples = 1000;

  /// Copy with every floating-point threshold multiplied by `factor`
  /// (counts and caps are left alone; the Gram condition limit is divided).
  Tolerances scaled(double factor) const;
};

const Tolerances& default_tolerances();

}  // namespace quasirep

#endif  // QUASIREP_CONFIG_HPP
