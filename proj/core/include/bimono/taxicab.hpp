// Copyright 2026 The bimono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>

#include "bimono/parallel.hpp"
#include "bimono/polynomial.hpp"

namespace bimono {

template <class V>
struct TaxicabResult {
  std::optional<KFoldHit<V>> hit;
  PlanStats stats;
};

/// Smallest value below z_max that is a sum of two positive cubes a^3 + b^3,
/// a <= b, in at least k ways. Multi-worker runs split [2, z_max) into
/// 4 * workers intervals of similar point counts; the answer does not
/// depend on the worker count.
template <class V = Value128>
TaxicabResult<V> taxicab(std::size_t k, const V& z_max, std::size_t workers = 1) {
  if (k == 0) throw RangeError("k must be at least 1");
  if (!(V(2) < z_max)) throw RangeError("z_max must exceed 2");
  WorkPlan<V> plan;
  plan.kind = TaskKind::KFold;
  plan.k = k;
  plan.max_hits = 1;
  plan.f = parse_polynomial("a^3+b^3").evaluator<V>();
  plan.domain = BimonotoneDomain::at_most_b(1);
  plan.intervals = workers <= 1 ? std::vector<LevelInterval<V>>{LevelInterval<V>(V(2), z_max)}
                                : partition_levels_balanced(plan.f, plan.domain, V(2), z_max, 4 * workers);

  TaxicabResult<V> out;
  out.stats = run_partitioned<V>(plan, workers, [&out](IntervalResult<V>& r) {
    auto& hits = std::get<std::vector<KFoldHit<V>>>(r.output);
    if (hits.empty()) return true;
    out.hit = std::move(hits.front());
    return false;
  });
  return out;
}

}  // namespace bimono
