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

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bimono/enumerate.hpp"

namespace bimono {

/// f(left) = value = g(right).
template <class V>
struct CollisionHit {
  V value;
  ParamPair left;
  ParamPair right;

  friend bool operator==(const CollisionHit&, const CollisionHit&) = default;
};

/// A value with at least k representations, listed in stream order.
template <class V>
struct KFoldHit {
  V value;
  std::vector<ParamPair> representations;

  friend bool operator==(const KFoldHit&, const KFoldHit&) = default;
};

template <class V>
struct ValueBlock {
  V value;
  std::vector<ParamPair> params;
};

/// Groups a sorted stream into maximal runs of equal value. Keeps one item
/// of lookahead.
template <class V>
class BlockReader {
 public:
  explicit BlockReader(Stream<V>& src) : src_(src), ahead_(src.next()) {}

  std::optional<ValueBlock<V>> next_block() {
    if (!ahead_) return std::nullopt;
    ValueBlock<V> block{ahead_->value, {{ahead_->a, ahead_->b}}};
    while (true) {
      ahead_ = src_.next();
      if (!ahead_ || ahead_->value != block.value) break;
      block.params.emplace_back(ahead_->a, ahead_->b);
    }
    if (ahead_ && ahead_->value < block.value) throw Error("input stream is not sorted");
    return block;
  }

 private:
  Stream<V>& src_;
  std::optional<StreamItem<V>> ahead_;
};

/// Merges two sorted streams and reports every pair with equal value. For a
/// shared value the full cross product of both blocks is emitted, left-major.
template <class V>
class CollisionStream {
 public:
  CollisionStream(std::unique_ptr<Stream<V>> left, std::unique_ptr<Stream<V>> right)
      : left_(std::move(left)), right_(std::move(right)), lreader_(*left_), rreader_(*right_) {}

  std::optional<CollisionHit<V>> next() {
    while (pending_.empty()) {
      if (!started_) {
        lblock_ = lreader_.next_block();
        rblock_ = rreader_.next_block();
        started_ = true;
      }
      if (!lblock_ || !rblock_) return std::nullopt;
      if (lblock_->value < rblock_->value) {
        lblock_ = lreader_.next_block();
      } else if (rblock_->value < lblock_->value) {
        rblock_ = rreader_.next_block();
      } else {
        for (const ParamPair& x : lblock_->params) {
          for (const ParamPair& y : rblock_->params) pending_.push_back(CollisionHit<V>{lblock_->value, x, y});
        }
        lblock_ = lreader_.next_block();
        rblock_ = rreader_.next_block();
      }
    }
    CollisionHit<V> hit = std::move(pending_.front());
    pending_.pop_front();
    return hit;
  }

 private:
  std::unique_ptr<Stream<V>> left_;
  std::unique_ptr<Stream<V>> right_;
  BlockReader<V> lreader_;
  BlockReader<V> rreader_;
  std::optional<ValueBlock<V>> lblock_;
  std::optional<ValueBlock<V>> rblock_;
  std::deque<CollisionHit<V>> pending_;
  bool started_ = false;
};

template <class V>
CollisionStream<V> collide(std::unique_ptr<Stream<V>> left, std::unique_ptr<Stream<V>> right) {
  return CollisionStream<V>(std::move(left), std::move(right));
}

/// Emits every run of equal values of length >= k.
template <class V>
class KFoldStream {
 public:
  KFoldStream(std::unique_ptr<Stream<V>> src, std::size_t k) : src_(std::move(src)), reader_(*src_), k_(k) {
    if (k_ == 0) throw RangeError("k must be at least 1");
  }

  std::optional<KFoldHit<V>> next() {
    while (auto block = reader_.next_block()) {
      if (block->params.size() >= k_) return KFoldHit<V>{std::move(block->value), std::move(block->params)};
    }
    return std::nullopt;
  }

 private:
  std::unique_ptr<Stream<V>> src_;
  BlockReader<V> reader_;
  std::size_t k_;
};

template <class V>
KFoldStream<V> k_fold_values(std::unique_ptr<Stream<V>> src, std::size_t k) {
  return KFoldStream<V>(std::move(src), k);
}

}  // namespace bimono
