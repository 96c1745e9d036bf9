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

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

#include "bimono/contour.hpp"
#include "bimono/search.hpp"

namespace bimono {

/// Splits [lo, hi) into contiguous half-open intervals whose widths differ
/// by at most one, wider ones first. Asking for more parts than the range
/// has values yields one interval per value.
template <class V>
std::vector<LevelInterval<V>> partition_levels(const V& lo, const V& hi, std::size_t parts) {
  if (!(lo < hi)) throw RangeError("partition needs lo < hi");
  if (parts == 0) throw RangeError("partition needs at least one part");
  V width = hi - lo;
  V count(static_cast<std::uint64_t>(parts));
  if (width < count) count = width;
  V base = width / count;
  V extra = width % count;
  std::vector<LevelInterval<V>> out;
  V at = lo;
  for (V i(0); i < count; i = i + V(1)) {
    V size = i < extra ? base + V(1) : base;
    V end = at + size;
    out.emplace_back(at, end);
    at = end;
  }
  return out;
}

/// Chooses cut points so that every interval holds about the same number
/// of domain points, using count_at_level and bisection on the level.
/// Cuts that coincide are merged, so fewer parts may come back.
template <class V>
std::vector<LevelInterval<V>> partition_levels_balanced(const Evaluator<V>& f, const BimonotoneDomain& d, const V& lo,
                                                        const V& hi, std::size_t parts) {
  if (!(lo < hi)) throw RangeError("partition needs lo < hi");
  if (parts == 0) throw RangeError("partition needs at least one part");
  // Points with value < z.
  auto below = [&](const V& z) -> Count { return count_at_level(f, d, V(z - V(1))).n; };
  const Count n_lo = below(lo);
  const Count n_hi = below(hi);
  const Count total = n_hi - n_lo;

  std::vector<V> cuts{lo};
  for (std::size_t k = 1; k < parts; ++k) {
    Count target = n_lo + total / parts * k + (total % parts) * k / parts;
    // Smallest z in (cuts.back(), hi] with below(z) >= target.
    V left = cuts.back();
    V right = hi;
    while (V(1) < right - left) {
      V mid = left + (right - left) / V(2);
      if (below(mid) >= target) right = mid;
      else left = mid;
    }
    if (right < hi && cuts.back() < right) cuts.push_back(right);
  }
  cuts.push_back(hi);

  std::vector<LevelInterval<V>> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.emplace_back(cuts[i], cuts[i + 1]);
  return out;
}

/// Runs task(0..count-1) on up to `workers` threads and hands each result
/// to sink strictly in index order. A worker may run ahead of the release
/// point by at most one interval, so at most 2*workers results are held.
///
/// sink returns false to stop early; tasks see the stop through the cancel
/// flag. If task i throws, results 0..i-1 are still delivered, then an
/// IntervalTaskError for i is raised.
template <class R>
void run_ordered(std::size_t count, std::size_t workers,
                 const std::function<R(std::size_t, const std::atomic<bool>&)>& task,
                 const std::function<bool(std::size_t, R&&)>& sink) {
  std::atomic<bool> cancel{false};
  auto fail = [](std::size_t i, std::exception_ptr e) {
    std::string what = "task failed";
    try {
      std::rethrow_exception(e);
    } catch (const std::exception& ex) {
      what = ex.what();
    } catch (...) {
    }
    throw IntervalTaskError(i, what, e);
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      std::optional<R> r;
      try {
        r.emplace(task(i, cancel));
      } catch (...) {
        fail(i, std::current_exception());
      }
      if (!sink(i, std::move(*r))) return;
    }
    return;
  }

  struct Slot {
    std::optional<R> result;
    std::exception_ptr error;
  };
  const std::size_t window = 2 * workers;
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Slot> done;
  std::size_t next_task = 0;
  std::size_t head = 0;

  auto work = [&] {
    while (true) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return cancel.load() || next_task >= count || next_task < head + window; });
        if (cancel.load() || next_task >= count) return;
        i = next_task++;
      }
      Slot slot;
      try {
        slot.result.emplace(task(i, cancel));
      } catch (...) {
        slot.error = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        done.emplace(i, std::move(slot));
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(std::min(workers, count));
  for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(work);
  auto stop = [&] {
    cancel = true;
    cv.notify_all();
    for (auto& t : pool) t.join();
    pool.clear();
  };

  try {
    for (; head < count;) {
      Slot slot;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done.count(head) != 0; });
        auto node = done.extract(head);
        slot = std::move(node.mapped());
      }
      std::size_t i = head;
      if (slot.error) {
        stop();
        fail(i, slot.error);
      }
      if (!sink(i, std::move(*slot.result))) break;
      {
        std::lock_guard lock(mu);
        ++head;
      }
      cv.notify_all();
    }
  } catch (...) {
    if (!pool.empty()) stop();
    throw;
  }
  stop();
}

enum class TaskKind { Enumerate, Collide, KFold };

/// A level range split into intervals plus the work to do on each.
template <class V>
struct WorkPlan {
  std::vector<LevelInterval<V>> intervals;
  TaskKind kind = TaskKind::Enumerate;
  Evaluator<V> f;
  BimonotoneDomain domain = BimonotoneDomain::rectangle(Axis(), Axis());
  /// Right-hand side for collisions; the domain defaults to `domain`.
  Evaluator<V> g;
  std::optional<BimonotoneDomain> g_domain;
  std::size_t k = 2;
  /// Stop each interval after this many hits (collide and k-fold tasks).
  std::optional<std::size_t> max_hits;
  /// Count the frontier bound against the global number of points below
  /// each interval (one extra contour walk per interval).
  bool absolute_bound = true;
  bool check_contracts = false;

  /// Throws RangeError unless the intervals are contiguous and ascending.
  void validate() const {
    if (intervals.empty()) throw RangeError("work plan has no intervals");
    for (std::size_t i = 1; i < intervals.size(); ++i) {
      if (intervals[i - 1].hi != intervals[i].lo) throw RangeError("work plan intervals are not contiguous");
    }
    if (!f) throw RangeError("work plan has no function");
    if (kind == TaskKind::Collide && !g) throw RangeError("collision plan has no second function");
    if (kind == TaskKind::KFold && k == 0) throw RangeError("k must be at least 1");
  }
};

template <class V>
using PlanOutput = std::variant<std::vector<StreamItem<V>>, std::vector<CollisionHit<V>>, std::vector<KFoldHit<V>>>;

struct IntervalStats {
  std::uint64_t items = 0;  // stream items consumed
  std::size_t peak = 0;     // largest frontier seen
  std::uint64_t bound_violations = 0;
};

template <class V>
struct IntervalResult {
  std::size_t interval = 0;
  PlanOutput<V> output;
  IntervalStats stats;
};

struct PlanStats {
  std::size_t intervals_run = 0;
  std::uint64_t items = 0;
  std::size_t peak = 0;
  std::uint64_t bound_violations = 0;
};

namespace detail {

template <class V>
void absorb(IntervalStats& s, const BimonotoneEnumerator<V>& e) {
  s.items += e.emitted();
  s.peak = std::max(s.peak, e.peak());
  s.bound_violations += e.bound_violations();
}

constexpr std::uint64_t kCancelPoll = 4096;

template <class V>
IntervalResult<V> run_interval(const WorkPlan<V>& plan, std::size_t i, const std::atomic<bool>& cancel) {
  const LevelInterval<V>& iv = plan.intervals[i];
  IntervalResult<V> out;
  out.interval = i;
  auto full = [&plan](std::size_t n) { return plan.max_hits && n >= *plan.max_hits; };
  auto range = [&](const Evaluator<V>& f, const BimonotoneDomain& d) {
    return std::make_unique<BimonotoneEnumerator<V>>(
        enumerate_range(f, d, iv, plan.absolute_bound, plan.check_contracts));
  };

  switch (plan.kind) {
    case TaskKind::Enumerate: {
      auto e = range(plan.f, plan.domain);
      std::vector<StreamItem<V>> items;
      while (auto item = e->next()) {
        items.push_back(std::move(*item));
        if (items.size() % kCancelPoll == 0 && cancel.load()) break;
      }
      absorb(out.stats, *e);
      out.output = std::move(items);
      break;
    }
    case TaskKind::Collide: {
      auto left = range(plan.f, plan.domain);
      auto right = range(plan.g, plan.g_domain ? *plan.g_domain : plan.domain);
      BimonotoneEnumerator<V>* l = left.get();
      BimonotoneEnumerator<V>* r = right.get();
      CollisionStream<V> hits(std::move(left), std::move(right));
      std::vector<CollisionHit<V>> found;
      while (!full(found.size())) {
        auto hit = hits.next();
        if (!hit) break;
        found.push_back(std::move(*hit));
        if (found.size() % kCancelPoll == 0 && cancel.load()) break;
      }
      absorb(out.stats, *l);
      absorb(out.stats, *r);
      out.output = std::move(found);
      break;
    }
    case TaskKind::KFold: {
      auto src = range(plan.f, plan.domain);
      BimonotoneEnumerator<V>* s = src.get();
      KFoldStream<V> hits(std::move(src), plan.k);
      std::vector<KFoldHit<V>> found;
      while (!full(found.size()) && !cancel.load()) {
        auto hit = hits.next();
        if (!hit) break;
        found.push_back(std::move(*hit));
      }
      absorb(out.stats, *s);
      out.output = std::move(found);
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Executes the plan on up to `workers` threads and releases the interval
/// results in interval order, so the merged output does not depend on the
/// worker count. Enumerated items are renumbered with global ordinals.
/// sink returns false to stop after the current interval.
template <class V>
PlanStats run_partitioned(const WorkPlan<V>& plan, std::size_t workers,
                          const std::function<bool(IntervalResult<V>&)>& sink) {
  plan.validate();
  PlanStats stats;
  std::uint64_t ordinal = 0;
  std::function<IntervalResult<V>(std::size_t, const std::atomic<bool>&)> task =
      [&plan](std::size_t i, const std::atomic<bool>& cancel) { return detail::run_interval(plan, i, cancel); };
  std::function<bool(std::size_t, IntervalResult<V>&&)> release = [&](std::size_t, IntervalResult<V>&& r) {
    if (auto* items = std::get_if<std::vector<StreamItem<V>>>(&r.output)) {
      for (auto& item : *items) item.ordinal = ++ordinal;
    }
    ++stats.intervals_run;
    stats.items += r.stats.items;
    stats.peak = std::max(stats.peak, r.stats.peak);
    stats.bound_violations += r.stats.bound_violations;
    return sink(r);
  };
  run_ordered<IntervalResult<V>>(plan.intervals.size(), workers, task, release);
  return stats;
}

}  // namespace bimono
