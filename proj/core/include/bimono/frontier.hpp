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

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bimono/axis.hpp"
#include "bimono/domain.hpp"

namespace bimono {

/// Ordered doubly-linked list of parameter pairs forming an antichain:
/// a strictly increasing and b strictly decreasing along the list.
///
/// Nodes live in a pool and keep their identifier until erased, so queue
/// entries can refer to them directly. Identifiers of erased nodes are
/// recycled.
class Frontier {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId npos = std::numeric_limits<NodeId>::max();

  Frontier() = default;

  /// Builds a list from pairs; throws DomainError if they are not ordered.
  static Frontier from_pairs(std::span<const ParamPair> pairs);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  NodeId first() const { return head_; }
  NodeId last() const { return tail_; }
  NodeId next(NodeId id) const { return nodes_[id].next; }
  NodeId prev(NodeId id) const { return nodes_[id].prev; }

  Param a(NodeId id) const { return nodes_[id].a; }
  Param b(NodeId id) const { return nodes_[id].b; }
  ParamPair pair(NodeId id) const { return {nodes_[id].a, nodes_[id].b}; }
  bool live(NodeId id) const { return id < nodes_.size() && nodes_[id].live; }

  /// (a*, b_*) of the successor; (+inf, -inf) past the last node.
  std::pair<ExtParam, ExtParam> successor(NodeId id) const;
  /// (a_*, b^*) of the predecessor; (-inf, +inf) before the first node.
  std::pair<ExtParam, ExtParam> predecessor(NodeId id) const;

  NodeId push_back(Param a, Param b);
  NodeId insert_after(NodeId id, Param a, Param b);
  void erase(NodeId id);
  void clear();

  std::vector<ParamPair> pairs() const;

  /// Full O(m) check of the ordering invariant.
  bool ordered() const;

 private:
  struct Node {
    Param a;
    Param b;
    NodeId prev;
    NodeId next;
    bool live;
  };

  NodeId allocate(Param a, Param b);
  void check_local(NodeId id) const;

  std::vector<Node> nodes_;
  std::vector<NodeId> free_;
  NodeId head_ = npos;
  NodeId tail_ = npos;
  std::size_t size_ = 0;
};

/// Outcome of removing a minimal node and repairing the list around it.
struct SplitResult {
  Frontier::NodeId right = Frontier::npos;  // the new (succ a, b), if inserted
  Frontier::NodeId up = Frontier::npos;     // the new (a, succ b), if inserted
};

/// Removes `id` from the frontier of domain `d` and inserts the new minima
/// (succ a, b) and (a, succ b) where they are not dominated by a neighbour or
/// outside the domain. Both guards are evaluated before the node is erased.
///
/// With `check_domain`, interior insertions are verified against `d` and a
/// DomainError is raised if the bounding functions break the rectangle
/// property.
SplitResult split_node(Frontier& frontier, Frontier::NodeId id, const BimonotoneDomain& d, bool check_domain = false);

}  // namespace bimono
