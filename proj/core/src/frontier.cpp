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

#include "bimono/frontier.hpp"

#include <cassert>
#include <string>

namespace bimono {

Frontier Frontier::from_pairs(std::span<const ParamPair> pairs) {
  Frontier out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && !(pairs[i - 1].first < pairs[i].first && pairs[i - 1].second > pairs[i].second)) {
      throw DomainError("frontier pairs not ordered at position " + std::to_string(i));
    }
    out.push_back(pairs[i].first, pairs[i].second);
  }
  return out;
}

std::pair<ExtParam, ExtParam> Frontier::successor(NodeId id) const {
  NodeId n = nodes_[id].next;
  if (n == npos) return {ExtParam::pos_inf(), ExtParam::neg_inf()};
  return {nodes_[n].a, nodes_[n].b};
}

std::pair<ExtParam, ExtParam> Frontier::predecessor(NodeId id) const {
  NodeId p = nodes_[id].prev;
  if (p == npos) return {ExtParam::neg_inf(), ExtParam::pos_inf()};
  return {nodes_[p].a, nodes_[p].b};
}

Frontier::NodeId Frontier::allocate(Param a, Param b) {
  NodeId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
    nodes_[id] = Node{a, b, npos, npos, true};
  } else {
    if (nodes_.size() >= npos) throw Error("frontier node pool exhausted");
    id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{a, b, npos, npos, true});
  }
  ++size_;
  return id;
}

void Frontier::check_local([[maybe_unused]] NodeId id) const {
#ifndef NDEBUG
  const Node& n = nodes_[id];
  if (n.prev != npos) assert(nodes_[n.prev].a < n.a && nodes_[n.prev].b > n.b);
  if (n.next != npos) assert(n.a < nodes_[n.next].a && n.b > nodes_[n.next].b);
#endif
}

Frontier::NodeId Frontier::push_back(Param a, Param b) {
  NodeId id = allocate(a, b);
  nodes_[id].prev = tail_;
  if (tail_ != npos) nodes_[tail_].next = id;
  else head_ = id;
  tail_ = id;
  check_local(id);
  return id;
}

Frontier::NodeId Frontier::insert_after(NodeId at, Param a, Param b) {
  NodeId id = allocate(a, b);
  NodeId after = nodes_[at].next;
  nodes_[id].prev = at;
  nodes_[id].next = after;
  nodes_[at].next = id;
  if (after != npos) nodes_[after].prev = id;
  else tail_ = id;
  return id;
}

void Frontier::erase(NodeId id) {
  Node& n = nodes_[id];
  assert(n.live);
  if (n.prev != npos) nodes_[n.prev].next = n.next;
  else head_ = n.next;
  if (n.next != npos) nodes_[n.next].prev = n.prev;
  else tail_ = n.prev;
  NodeId p = n.prev;
  n.live = false;
  free_.push_back(id);
  --size_;
  if (p != npos) check_local(p);
  else if (head_ != npos) check_local(head_);
}

void Frontier::clear() {
  nodes_.clear();
  free_.clear();
  head_ = tail_ = npos;
  size_ = 0;
}

std::vector<ParamPair> Frontier::pairs() const {
  std::vector<ParamPair> out;
  out.reserve(size_);
  for (NodeId id = head_; id != npos; id = nodes_[id].next) out.emplace_back(nodes_[id].a, nodes_[id].b);
  return out;
}

bool Frontier::ordered() const {
  std::size_t seen = 0;
  for (NodeId id = head_; id != npos; id = nodes_[id].next) {
    ++seen;
    NodeId n = nodes_[id].next;
    if (n != npos && !(nodes_[id].a < nodes_[n].a && nodes_[id].b > nodes_[n].b)) return false;
    if (n != npos && nodes_[n].prev != id) return false;
  }
  return seen == size_;
}

SplitResult split_node(Frontier& frontier, Frontier::NodeId id, const BimonotoneDomain& d, bool check_domain) {
  SplitResult out;
  const Param a = frontier.a(id);
  const Param b = frontier.b(id);
  const ExtParam sa = axis_succ(d.axis_a(), a);
  const ExtParam sb = axis_succ(d.axis_b(), b);

  // Decide both insertions against the unmodified list.
  bool insert_right;
  if (frontier.next(id) == Frontier::npos) {
    insert_right = d.contains(sa, ExtParam(b));
  } else {
    insert_right = sa < frontier.successor(id).first;
    if (insert_right && check_domain && !d.contains(sa, ExtParam(b))) {
      throw DomainError("domain lost the rectangle property at (" + std::to_string(sa.value()) + "," +
                        std::to_string(b) + ")");
    }
  }
  bool insert_up;
  if (frontier.prev(id) == Frontier::npos) {
    insert_up = d.contains(ExtParam(a), sb);
  } else {
    insert_up = sb < frontier.predecessor(id).second;
    if (insert_up && check_domain && !d.contains(ExtParam(a), sb)) {
      throw DomainError("domain lost the rectangle property at (" + std::to_string(a) + "," +
                        std::to_string(sb.value()) + ")");
    }
  }

  if (insert_right) out.right = frontier.insert_after(id, sa.value(), b);
  if (insert_up) out.up = frontier.insert_after(id, a, sb.value());
  frontier.erase(id);
  return out;
}

}  // namespace bimono
