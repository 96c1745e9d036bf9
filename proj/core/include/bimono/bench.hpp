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

#include <cmath>
#include <cstdint>
#include <vector>

#include "bimono/enumerate.hpp"

namespace bimono {

enum class BenchAlgorithm { Bimonotone, Semimonotone };

template <class V>
struct BenchSample {
  std::uint64_t n;      // outputs so far
  std::size_t m;        // current frontier or queue length
  std::size_t m_max;    // peak so far
  V value;              // value of the n-th output
};

template <class V>
struct BenchResult {
  std::vector<BenchSample<V>> samples;
  double slope = 0.0;
  std::uint64_t bound_violations = 0;
};

/// Least-squares slope of log(m_max) against log(n) over the last half of
/// the samples. Zero when fewer than two samples remain.
template <class V>
double fit_loglog_slope(const std::vector<BenchSample<V>>& samples) {
  std::size_t from = samples.size() / 2;
  std::size_t k = samples.size() - from;
  if (k < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = from; i < samples.size(); ++i) {
    double x = std::log(static_cast<double>(samples[i].n));
    double y = std::log(static_cast<double>(samples[i].m_max));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = static_cast<double>(k) * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (static_cast<double>(k) * sxy - sx * sy) / denom;
}

/// Runs one enumeration for n_max outputs (or until the domain runs out)
/// and samples the memory footprint every sample_every outputs.
/// The semimonotone variant is the adaptive one and needs a rectangle.
template <class V>
BenchResult<V> bench_frontier(const Evaluator<V>& f, const BimonotoneDomain& d, BenchAlgorithm alg,
                              std::uint64_t n_max, std::uint64_t sample_every) {
  if (sample_every == 0 || n_max < 10 * sample_every) throw RangeError("bench needs n_max >= 10 * sample_every > 0");
  BenchResult<V> out;
  out.samples.reserve(n_max / sample_every);

  if (alg == BenchAlgorithm::Bimonotone) {
    BimonotoneEnumerator<V> e(f, d);
    while (e.emitted() < n_max) {
      auto item = e.next();
      if (!item) break;
      if (item->ordinal % sample_every == 0) {
        out.samples.push_back({item->ordinal, e.frontier().size(), e.peak(), std::move(item->value)});
      }
    }
    out.bound_violations = e.bound_violations();
  } else {
    if (d.shape() != BimonotoneDomain::Shape::Rectangle) throw RangeError("semimonotone bench needs a rectangle");
    SemimonotoneAdaptiveStream<V> e(f, d.axis_a(), d.axis_b());
    while (e.emitted() < n_max) {
      auto item = e.next();
      if (!item) break;
      if (item->ordinal % sample_every == 0) {
        out.samples.push_back({item->ordinal, e.queue_size(), e.peak(), std::move(item->value)});
      }
    }
  }
  out.slope = fit_loglog_slope(out.samples);
  return out;
}

}  // namespace bimono
