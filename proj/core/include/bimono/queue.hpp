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
#include <cassert>
#include <functional>
#include <utility>
#include <vector>

#include "bimono/frontier.hpp"

namespace bimono {

template <class V>
struct QueueEntry {
  V value;
  Param b;
  Param a;
  Frontier::NodeId node = Frontier::npos;
};

/// Lexicographic (value, b, a) order; the deterministic tie-break prefers
/// the smaller b-coordinate.
template <class V>
bool entry_less(const QueueEntry<V>& x, const QueueEntry<V>& y) {
  if (x.value < y.value) return true;
  if (y.value < x.value) return false;
  if (x.b != y.b) return x.b < y.b;
  return x.a < y.a;
}

/// Binary min-heap over QueueEntry. Push and pop only; entries are never
/// re-keyed.
template <class V>
class ValueQueue {
 public:
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  const QueueEntry<V>& top() const {
    assert(!heap_.empty());
    return heap_.front();
  }

  void push(QueueEntry<V> e) {
    heap_.push_back(std::move(e));
    std::push_heap(heap_.begin(), heap_.end(), greater);
  }

  QueueEntry<V> pop() {
    assert(!heap_.empty());
    std::pop_heap(heap_.begin(), heap_.end(), greater);
    QueueEntry<V> e = std::move(heap_.back());
    heap_.pop_back();
    return e;
  }

  void clear() { heap_.clear(); }
  void reserve(std::size_t n) { heap_.reserve(n); }

  /// Unordered view of the pending entries.
  const std::vector<QueueEntry<V>>& entries() const { return heap_; }

 private:
  static bool greater(const QueueEntry<V>& x, const QueueEntry<V>& y) { return entry_less(y, x); }

  std::vector<QueueEntry<V>> heap_;
};

}  // namespace bimono
