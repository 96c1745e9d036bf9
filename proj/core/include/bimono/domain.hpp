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

#include <functional>
#include <string>
#include <vector>

#include "bimono/axis.hpp"

namespace bimono {

/// A region X of A x B bounded below by non-decreasing functions
/// alpha: A -> B and beta: B -> A, i.e.
///
///   X = { (a,b) : a >= beta(b) and b >= alpha(a) }.
///
/// The bounds must satisfy beta(alpha(a)) <= a and alpha(beta(b)) <= b with
/// equality only at the axis minima; validate_domain_window spot-checks
/// this. Rectangles and the two triangles a <= b, a >= b have inline fast
/// paths, anything else goes through the user-supplied callbacks.
class BimonotoneDomain {
 public:
  using Bound = std::function<Param(Param)>;

  enum class Shape { Rectangle, AtMostB, AtLeastB, Custom };

  BimonotoneDomain(Axis a, Axis b, Bound alpha, Bound beta, std::string name);

  /// The full product A x B.
  static BimonotoneDomain rectangle(Axis a, Axis b);
  /// { (a,b) : a <= b }; both axes must share their minimum.
  static BimonotoneDomain at_most_b(Axis a, Axis b);
  static BimonotoneDomain at_most_b(Param min = 1) { return at_most_b(Axis(min), Axis(min)); }
  /// { (a,b) : a >= b }; both axes must share their minimum.
  static BimonotoneDomain at_least_b(Axis a, Axis b);
  static BimonotoneDomain at_least_b(Param min = 1) { return at_least_b(Axis(min), Axis(min)); }

  const Axis& axis_a() const { return a_; }
  const Axis& axis_b() const { return b_; }
  Shape shape() const { return shape_; }

  /// Canonical text used as a compatibility key in checkpoints.
  const std::string& name() const { return name_; }

  Param alpha(Param a) const {
    switch (shape_) {
      case Shape::Rectangle:
      case Shape::AtLeastB:
        return b_.min;
      case Shape::AtMostB:
        return a;
      case Shape::Custom:
        break;
    }
    return alpha_(a);
  }

  Param beta(Param b) const {
    switch (shape_) {
      case Shape::Rectangle:
      case Shape::AtMostB:
        return a_.min;
      case Shape::AtLeastB:
        return b;
      case Shape::Custom:
        break;
    }
    return beta_(b);
  }

  bool contains(Param a, Param b) const {
    if (!a_.contains(a) || !b_.contains(b)) return false;
    switch (shape_) {
      case Shape::Rectangle:
        return true;
      case Shape::AtMostB:
        return a <= b;
      case Shape::AtLeastB:
        return a >= b;
      case Shape::Custom:
        break;
    }
    return a >= beta_(b) && b >= alpha_(a);
  }

  bool contains(ExtParam a, ExtParam b) const {
    return a.finite() && b.finite() && contains(a.value(), b.value());
  }

 private:
  BimonotoneDomain(Axis a, Axis b, Shape shape, std::string name);

  Axis a_;
  Axis b_;
  Shape shape_;
  Bound alpha_;
  Bound beta_;
  std::string name_;
};

struct DomainViolation {
  enum class Rule { AlphaRange, BetaRange, AlphaMonotone, BetaMonotone, BetaAlpha, AlphaBeta };
  Rule rule;
  Param witness;
  std::string message;
};

/// Checks the bounding-function axioms on [amin, a_hi] x [bmin, b_hi].
/// An empty result means the window passed.
std::vector<DomainViolation> validate_domain_window(const BimonotoneDomain& d, Param a_hi, Param b_hi);

}  // namespace bimono
