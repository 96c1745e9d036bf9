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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bimono/domain.hpp"
#include "bimono/evaluator.hpp"
#include "bimono/frontier.hpp"
#include "bimono/queue.hpp"

namespace bimono {

template <class V>
struct StreamItem {
  V value;
  Param a;
  Param b;
  std::uint64_t ordinal;  // 1-based position in the stream

  friend bool operator==(const StreamItem&, const StreamItem&) = default;
};

/// Pull-based sorted stream. next() returns nullopt once exhausted.
template <class V>
class Stream {
 public:
  virtual ~Stream() = default;
  virtual std::optional<StreamItem<V>> next() = 0;
};

/// True when (m-1)^2 <= 2n, i.e. m <= sqrt(2n) + 1.
inline bool within_sqrt_bound(std::uint64_t m, Count n) {
  if (m == 0) return true;
  Count k = m - 1;
  return k * k <= 2 * n;
}

struct MonotonicityViolation {
  enum class Direction { AlongA, AlongB };
  Param a;
  Param b;
  Direction direction;

  friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

// ---------------------------------------------------------------------------
// Generic enumeration: evaluate everything, sort.

template <class V>
class SortedGenericStream final : public Stream<V> {
 public:
  SortedGenericStream(const Evaluator<V>& f, std::span<const ParamPair> points) {
    items_.reserve(points.size());
    for (auto [a, b] : points) items_.push_back(QueueEntry<V>{f(a, b), b, a});
    std::sort(items_.begin(), items_.end(), entry_less<V>);
  }

  std::optional<StreamItem<V>> next() override {
    if (pos_ == items_.size()) return std::nullopt;
    const auto& e = items_[pos_++];
    return StreamItem<V>{e.value, e.a, e.b, pos_};
  }

 private:
  std::vector<QueueEntry<V>> items_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Semimonotone enumeration over A x B with a finite set B: one queue entry
// per b, each advancing along A.

template <class V>
class SemimonotoneFiniteStream final : public Stream<V> {
 public:
  SemimonotoneFiniteStream(Evaluator<V> f, Axis axis_a, std::vector<Param> bs)
      : f_(std::move(f)), axis_a_(axis_a) {
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    for (Param b : bs) queue_.push(QueueEntry<V>{f_(axis_a_.min, b), b, axis_a_.min});
    peak_ = queue_.size();
  }

  std::optional<StreamItem<V>> next() override {
    if (queue_.empty()) return std::nullopt;
    QueueEntry<V> e = queue_.pop();
    ExtParam sa = axis_succ(axis_a_, e.a);
    if (sa.finite()) queue_.push(QueueEntry<V>{f_(sa.value(), e.b), e.b, sa.value()});
    peak_ = std::max(peak_, queue_.size());
    return StreamItem<V>{std::move(e.value), e.a, e.b, ++emitted_};
  }

  std::size_t queue_size() const { return queue_.size(); }
  std::size_t peak() const { return peak_; }

 private:
  Evaluator<V> f_;
  Axis axis_a_;
  ValueQueue<V> queue_;
  std::uint64_t emitted_ = 0;
  std::size_t peak_ = 0;
};

// ---------------------------------------------------------------------------
// Adaptive semimonotone enumeration: the working window of b values grows
// whenever the current minimum sits in its top row. Requires f monotone in
// a and b -> f(amin, b) non-decreasing.

template <class V>
class SemimonotoneAdaptiveStream final : public Stream<V> {
 public:
  SemimonotoneAdaptiveStream(Evaluator<V> f, Axis axis_a, Axis axis_b)
      : f_(std::move(f)), axis_a_(axis_a), axis_b_(axis_b), b_top_(axis_b.min) {
    queue_.push(QueueEntry<V>{f_(axis_a_.min, axis_b_.min), axis_b_.min, axis_a_.min});
    peak_ = 1;
  }

  std::optional<StreamItem<V>> next() override {
    if (queue_.empty()) return std::nullopt;
    QueueEntry<V> e = queue_.pop();
    ExtParam sa = axis_succ(axis_a_, e.a);
    if (sa.finite()) queue_.push(QueueEntry<V>{f_(sa.value(), e.b), e.b, sa.value()});
    if (b_top_.finite() && e.b == b_top_.value()) {
      b_top_ = axis_succ(axis_b_, e.b);
      if (b_top_.finite()) queue_.push(QueueEntry<V>{f_(axis_a_.min, b_top_.value()), b_top_.value(), axis_a_.min});
    }
    peak_ = std::max(peak_, queue_.size());
    return StreamItem<V>{std::move(e.value), e.a, e.b, ++emitted_};
  }

  std::size_t queue_size() const { return queue_.size(); }
  std::size_t peak() const { return peak_; }
  std::uint64_t emitted() const { return emitted_; }
  std::optional<V> peek_value() const {
    if (queue_.empty()) return std::nullopt;
    return queue_.top().value;
  }

  /// Parameter pairs currently held in the queue, sorted.
  std::vector<ParamPair> pending_pairs() const {
    std::vector<ParamPair> out;
    for (const auto& e : queue_.entries()) out.emplace_back(e.a, e.b);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Evaluator<V> f_;
  Axis axis_a_;
  Axis axis_b_;
  ExtParam b_top_;
  ValueQueue<V> queue_;
  std::uint64_t emitted_ = 0;
  std::size_t peak_ = 0;
};

// ---------------------------------------------------------------------------
// Bimonotone enumeration on a bimonotone domain.

template <class V>
struct EnumeratorOptions {
  /// The stream ends before the first value >= ceiling.
  std::optional<V> ceiling;
  /// Verify monotonicity of every insertion and the domain's rectangle
  /// property; costs one comparison and one membership test per insertion.
  bool check_contracts = false;
  /// Number of domain points ordered before this stream's first item. When
  /// set, m <= sqrt(2n) + 1 is checked after every output with n counted
  /// from the global minimum. Full enumerations set it to 0.
  std::optional<Count> bound_base;
  /// Ordinal of the item preceding the first one emitted (resume support).
  std::uint64_t ordinal_base = 0;
};

template <class V>
class BimonotoneEnumerator final : public Stream<V> {
 public:
  /// Starts at the domain minimum.
  BimonotoneEnumerator(Evaluator<V> f, BimonotoneDomain d, EnumeratorOptions<V> opts = {})
      : f_(std::move(f)), d_(std::move(d)), opts_(std::move(opts)) {
    if (!opts_.bound_base) opts_.bound_base = Count{0};
    Param a = d_.axis_a().min;
    Param b = d_.axis_b().min;
    Frontier::NodeId id = frontier_.push_back(a, b);
    queue_.push(QueueEntry<V>{f_(a, b), b, a, id});
    init_counters();
  }

  /// Starts from an explicit frontier, which must be the minima of the
  /// not-yet-emitted (saturated) remainder of the domain.
  BimonotoneEnumerator(Evaluator<V> f, BimonotoneDomain d, std::span<const ParamPair> frontier,
                       EnumeratorOptions<V> opts)
      : f_(std::move(f)), d_(std::move(d)), opts_(std::move(opts)) {
    frontier_ = Frontier::from_pairs(frontier);
    queue_.reserve(frontier.size());
    for (Frontier::NodeId id = frontier_.first(); id != Frontier::npos; id = frontier_.next(id)) {
      if (opts_.check_contracts && !d_.contains(frontier_.a(id), frontier_.b(id))) {
        throw DomainError("seed frontier point outside the domain");
      }
      queue_.push(QueueEntry<V>{f_(frontier_.a(id), frontier_.b(id)), frontier_.b(id), frontier_.a(id), id});
    }
    init_counters();
  }

  std::optional<StreamItem<V>> next() override {
    if (exhausted()) return std::nullopt;
    QueueEntry<V> e = queue_.pop();
    if (!last_value_ || *last_value_ < e.value) {
      block_start_ = emitted_;
      last_value_ = e.value;
    }

    SplitResult split = split_node(frontier_, e.node, d_, opts_.check_contracts);
    if (split.right != Frontier::npos) insert(split.right, e);
    if (split.up != Frontier::npos) insert(split.up, e);

    ++emitted_;
    peak_ = std::max(peak_, frontier_.size());
    if (opts_.bound_base) {
      Count n = *opts_.bound_base + (emitted_ - opts_.ordinal_base);
      if (!within_sqrt_bound(frontier_.size(), n)) ++bound_violations_;
    }
    return StreamItem<V>{std::move(e.value), e.a, e.b, emitted_};
  }

  /// True once the domain is exhausted or the ceiling is reached.
  bool exhausted() const { return queue_.empty() || (opts_.ceiling && !(queue_.top().value < *opts_.ceiling)); }

  /// Value of the next item regardless of the ceiling.
  std::optional<V> peek_value() const {
    if (queue_.empty()) return std::nullopt;
    return queue_.top().value;
  }

  /// No equal-value block is split: every pending value exceeds every
  /// emitted one.
  bool at_value_boundary() const { return queue_.empty() || !last_value_ || *last_value_ < queue_.top().value; }

  const Frontier& frontier() const { return frontier_; }
  std::size_t queue_size() const { return queue_.size(); }
  std::uint64_t emitted() const { return emitted_; }
  std::size_t peak() const { return peak_; }
  std::uint64_t bound_violations() const { return bound_violations_; }
  bool bound_checked() const { return opts_.bound_base.has_value(); }
  const std::optional<V>& last_value() const { return last_value_; }
  /// Ordinal count before the equal-value block of the last emitted item.
  std::uint64_t block_start() const { return block_start_; }
  const std::vector<MonotonicityViolation>& contract_violations() const { return violations_; }
  const BimonotoneDomain& domain() const { return d_; }
  const Evaluator<V>& evaluator() const { return f_; }
  const EnumeratorOptions<V>& options() const { return opts_; }

  /// Pending queue entries, unordered.
  const std::vector<QueueEntry<V>>& pending() const { return queue_.entries(); }

 private:
  void init_counters() {
    emitted_ = opts_.ordinal_base;
    block_start_ = emitted_;
    peak_ = frontier_.size();
  }

  void insert(Frontier::NodeId id, const QueueEntry<V>& from) {
    Param a = frontier_.a(id);
    Param b = frontier_.b(id);
    V v = f_(a, b);
    if (opts_.check_contracts && v < from.value) {
      violations_.push_back({from.a, from.b,
                             a != from.a ? MonotonicityViolation::Direction::AlongA
                                         : MonotonicityViolation::Direction::AlongB});
    }
    queue_.push(QueueEntry<V>{std::move(v), b, a, id});
  }

  Evaluator<V> f_;
  BimonotoneDomain d_;
  EnumeratorOptions<V> opts_;
  Frontier frontier_;
  ValueQueue<V> queue_;
  std::uint64_t emitted_ = 0;
  std::uint64_t block_start_ = 0;
  std::optional<V> last_value_;
  std::size_t peak_ = 0;
  std::uint64_t bound_violations_ = 0;
  std::vector<MonotonicityViolation> violations_;
};

template <class V>
BimonotoneEnumerator<V> enumerate_bimonotone(Evaluator<V> f, BimonotoneDomain d, EnumeratorOptions<V> opts = {}) {
  return BimonotoneEnumerator<V>(std::move(f), std::move(d), std::move(opts));
}

/// Exhaustively checks f(a,b) <= f(a+1,b) and f(a,b) <= f(a,b+1) on
/// ([amin, a_hi] x [bmin, b_hi]) intersected with the domain.
template <class V>
std::vector<MonotonicityViolation> detect_monotonicity_violation(const Evaluator<V>& f, const BimonotoneDomain& d,
                                                                 Param a_hi, Param b_hi) {
  std::vector<MonotonicityViolation> out;
  a_hi = std::min(a_hi, d.axis_a().last());
  b_hi = std::min(b_hi, d.axis_b().last());
  for (Param a = d.axis_a().min; a <= a_hi; ++a) {
    for (Param b = d.axis_b().min; b <= b_hi; ++b) {
      if (!d.contains(a, b)) continue;
      V v = f(a, b);
      if (a < a_hi && d.contains(a + 1, b) && f(a + 1, b) < v) {
        out.push_back({a, b, MonotonicityViolation::Direction::AlongA});
      }
      if (b < b_hi && d.contains(a, b + 1) && f(a, b + 1) < v) {
        out.push_back({a, b, MonotonicityViolation::Direction::AlongB});
      }
    }
  }
  return out;
}

}  // namespace bimono
