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

// Level-z initialization. Tracing the contour of { f >= z } inside a
// bimonotone domain yields the frontier a stream would hold right before
// emitting its first value >= z, without enumerating anything below z.

#include <limits>
#include <optional>
#include <vector>

#include "bimono/enumerate.hpp"

namespace bimono {

enum class SearchMode { Galloping, Linear };

template <class V>
struct LevelInterval {
  V lo;  // inclusive
  V hi;  // exclusive

  LevelInterval(V lo_, V hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw RangeError("level interval needs lo < hi");
  }
  friend bool operator==(const LevelInterval&, const LevelInterval&) = default;
};

struct LevelCounts {
  Count n = 0;           // domain points with f <= z
  std::uint64_t m = 0;   // size of Min { f > z }
};

namespace detail {

/// pred(from) holds; returns the largest x in [from, limit] with pred true on
/// all of [from, x]. pred must be true on a prefix.
template <class Pred>
Param extend_up(Param from, Param limit, Pred&& pred, SearchMode mode) {
  Param good = from;
  if (mode == SearchMode::Linear) {
    while (good < limit && pred(good + 1)) ++good;
    return good;
  }
  Param step = 1;
  while (good < limit) {
    Param cand = (limit - good > step) ? good + step : limit;
    if (!pred(cand)) {
      Param bad = cand;
      while (bad - good > 1) {
        Param mid = good + (bad - good) / 2;
        if (pred(mid)) good = mid;
        else bad = mid;
      }
      return good;
    }
    good = cand;
    if (step <= std::numeric_limits<Param>::max() / 2) step *= 2;
  }
  return good;
}

/// pred(from) holds; returns the smallest x in [floor, from] with pred true
/// on all of [x, from]. pred must be true on a suffix.
template <class Pred>
Param extend_down(Param from, Param floor, Pred&& pred, SearchMode mode) {
  Param good = from;
  if (mode == SearchMode::Linear) {
    while (good > floor && pred(good - 1)) --good;
    return good;
  }
  Param step = 1;
  while (good > floor) {
    Param cand = (good - floor > step) ? good - step : floor;
    if (!pred(cand)) {
      Param bad = cand;
      while (good - bad > 1) {
        Param mid = bad + (good - bad) / 2;
        if (pred(mid)) good = mid;
        else bad = mid;
      }
      return good;
    }
    good = cand;
    if (step <= std::numeric_limits<Param>::max() / 2) step *= 2;
  }
  return good;
}

/// f(a,b) >= z, or f(a,b) > z when strict. An evaluation that overflows the
/// value type lies above every representable level and counts as reached.
template <class V>
class LevelProbe {
 public:
  LevelProbe(const Evaluator<V>& f, const V& z, bool strict) : f_(f), z_(z), strict_(strict) {}

  bool reached(Param a, Param b) const {
    try {
      V v = f_(a, b);
      return strict_ ? z_ < v : !(v < z_);
    } catch (const ValueOverflow&) {
      return true;
    }
  }

 private:
  const Evaluator<V>& f_;
  const V& z_;
  bool strict_;
};

template <class V>
std::vector<ParamPair> trace_minima(const Evaluator<V>& f, const BimonotoneDomain& d, const LevelProbe<V>& probe,
                                    SearchMode mode) {
  const Axis& A = d.axis_a();
  const Axis& B = d.axis_b();
  std::vector<ParamPair> minima;
  Param a = A.min;
  Param b = B.min;
  bool inside = true;

  // Find the smallest column holding a point at or above the level.
  while (true) {
    if (!d.contains(a, b)) {
      inside = false;
      break;
    }
    if (probe.reached(a, b)) break;
    Param last = extend_up(b, B.last(), [&](Param x) { return d.contains(a, x) && !probe.reached(a, x); }, mode);
    if (last < B.last() && d.contains(a, last + 1)) {
      b = last + 1;
      break;
    }
    b = last;
    if (a >= A.last()) {
      inside = false;  // greatest element reached below the level
      break;
    }
    ++a;
  }

  // Walk the staircase: lower b as far as the level allows, record the
  // minimum, then step diagonally and move right until the level is reached.
  while (inside) {
    b = extend_down(b, B.min, [&](Param x) { return d.contains(a, x) && probe.reached(a, x); }, mode);
    minima.emplace_back(a, b);
    if (a >= A.last() || b <= B.min) break;
    ++a;
    --b;
    if (!d.contains(a, b)) break;
    if (!probe.reached(a, b)) {
      Param last = extend_up(a, A.last(), [&](Param x) { return d.contains(x, b) && !probe.reached(x, b); }, mode);
      if (last >= A.last()) break;
      a = last + 1;
      if (!d.contains(a, b)) break;
    }
  }
  return minima;
}

}  // namespace detail

/// Min { x in d : f(x) >= z } as an ordered list (a ascending, b
/// descending). Empty iff no domain point reaches z.
template <class V>
std::vector<ParamPair> construct_minima(const Evaluator<V>& f, const BimonotoneDomain& d, const V& z,
                                        SearchMode mode = SearchMode::Galloping) {
  return detail::trace_minima(f, d, detail::LevelProbe<V>(f, z, false), mode);
}

/// Min { x in d : f(x) > z }.
template <class V>
std::vector<ParamPair> construct_minima_above(const Evaluator<V>& f, const BimonotoneDomain& d, const V& z,
                                              SearchMode mode = SearchMode::Galloping) {
  return detail::trace_minima(f, d, detail::LevelProbe<V>(f, z, true), mode);
}

/// Counts the domain points with f <= z and the minima of { f > z } in one
/// walk over the columns, descending the contour height h(a) (the first b
/// with f(a,b) > z) column by column. The walk stops at the first column
/// whose lowest point already exceeds z, since every later column does too.
template <class V>
LevelCounts count_at_level(const Evaluator<V>& f, const BimonotoneDomain& d, const V& z,
                           SearchMode mode = SearchMode::Galloping) {
  const Axis& A = d.axis_a();
  const Axis& B = d.axis_b();
  detail::LevelProbe<V> probe(f, z, true);
  LevelCounts out;
  std::optional<Param> prev_h;
  std::optional<Param> record;

  for (Param a = A.min;; ++a) {
    const Param lo = d.alpha(a);
    if (prev_h && *prev_h <= lo) break;

    std::optional<Param> h;
    Count column;
    if (prev_h) {
      // (a, prev_h) lies in the domain and above the level.
      h = detail::extend_down(*prev_h, lo, [&](Param x) { return probe.reached(a, x); }, mode);
      column = *h - lo;
    } else if (probe.reached(a, lo)) {
      h = lo;
      column = 0;
    } else {
      Param last = detail::extend_up(lo, B.last(), [&](Param x) { return d.contains(a, x) && !probe.reached(a, x); },
                                     mode);
      if (last < B.last() && d.contains(a, last + 1)) h = last + 1;
      column = Count(last - lo) + 1;
    }

    out.n = checked_count_add(out.n, column);
    if (h && (!record || *h < *record)) {
      ++out.m;
      record = h;
    }
    prev_h = h;
    if (a >= A.last()) break;
  }
  return out;
}

/// Counts for the state right before level z: n points with f < z and the
/// m minima of { f >= z }. Values are integers, so this is count_at_level
/// at z - 1.
template <class V>
LevelCounts count_below(const Evaluator<V>& f, const BimonotoneDomain& d, const V& z,
                        SearchMode mode = SearchMode::Galloping) {
  return count_at_level(f, d, V(z - V(1)), mode);
}

/// A stream positioned right before the first value >= lo. Ordinals restart
/// at opts.ordinal_base + 1. With absolute_bound, the frontier bound is
/// checked against the global count of points below lo.
template <class V>
BimonotoneEnumerator<V> enumerate_from(Evaluator<V> f, BimonotoneDomain d, const V& lo, EnumeratorOptions<V> opts = {},
                                       bool absolute_bound = false) {
  std::vector<ParamPair> seed = construct_minima(f, d, lo);
  if (absolute_bound) {
    V first = f(d.axis_a().min, d.axis_b().min);
    opts.bound_base = !(first < lo) ? Count{0} : count_at_level(f, d, V(lo - V(1))).n;
  }
  return BimonotoneEnumerator<V>(std::move(f), std::move(d), seed, std::move(opts));
}

/// Exactly the domain points with lo <= f < hi, in stream order.
template <class V>
BimonotoneEnumerator<V> enumerate_range(Evaluator<V> f, BimonotoneDomain d, const LevelInterval<V>& iv,
                                        bool absolute_bound = false, bool check_contracts = false) {
  EnumeratorOptions<V> opts;
  opts.ceiling = iv.hi;
  opts.check_contracts = check_contracts;
  return enumerate_from(std::move(f), std::move(d), iv.lo, std::move(opts), absolute_bound);
}

}  // namespace bimono
