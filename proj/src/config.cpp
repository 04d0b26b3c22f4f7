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

#include "quasirep/config.hpp"

namespace quasirep {

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.unit *= factor;
  t.unitarity *= factor;
  t.irreducibility *= factor;
  t.character_match *= factor;
  t.eigen_cluster *= factor;
  t.frobenius_schur *= factor;
  t.admissibility *= factor;
  t.agreement *= factor;
  t.rank *= factor;
  if (factor > 0) t.gram_condition /= factor;
  return t;
}

const Tolerances& default_tolerances() {
  static const Tolerances kDefaults{};
  return kDefaults;
}

}  // namespace quasirep
