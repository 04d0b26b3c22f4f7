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

#ifndef QUASIREP_RANDOM_HPP
#define QUASIREP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "quasirep/config.hpp"

namespace quasirep {

using Rng = std::mt19937_64;

/// Seed for task `index` of a run seeded with `seed`. Results depend only on
/// (seed, index), never on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

inline Rng make_rng(std::uint64_t seed, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, index));
}

/// d x d matrix of iid standard complex Gaussians (E|z|^2 = 1).
Matrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
Matrix haar_unitary(Rng& rng, Eigen::Index dim);

/// Random Hermitian matrix (A + A^dag)/2 with A complex Gaussian.
Matrix random_hermitian(Rng& rng, Eigen::Index dim);

}  // namespace quasirep

#endif  // QUASIREP_RANDOM_HPP
