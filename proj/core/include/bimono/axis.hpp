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

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#include "bimono/errors.hpp"

namespace bimono {

/// Canonical integer index of an axis element.
using Param = std::uint64_t;

using ParamPair = std::pair<Param, Param>;

/// An axis element extended by the two sentinels -inf and +inf.
class ExtParam {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  constexpr ExtParam(Param p) : kind_(Kind::Finite), p_(p) {}  // NOLINT(implicit)

  static constexpr ExtParam neg_inf() { return ExtParam(Kind::NegInf); }
  static constexpr ExtParam pos_inf() { return ExtParam(Kind::PosInf); }

  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr Kind kind() const { return kind_; }
  constexpr Param value() const { return p_; }

  friend constexpr bool operator==(ExtParam x, ExtParam y) {
    return x.kind_ == y.kind_ && (x.kind_ != Kind::Finite || x.p_ == y.p_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtParam x, ExtParam y) {
    if (x.kind_ != y.kind_) return x.kind_ <=> y.kind_;
    if (x.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return x.p_ <=> y.p_;
  }

 private:
  constexpr explicit ExtParam(Kind k) : kind_(k), p_(0) {}

  Kind kind_;
  Param p_;
};

/// Integer interval {min, min+1, ..., max}; max absent means unbounded.
struct Axis {
  Param min = 1;
  std::optional<Param> max;

  constexpr Axis() = default;
  constexpr Axis(Param lo, std::optional<Param> hi = std::nullopt) : min(lo), max(hi) {
    if (max && *max < min) throw DomainError("axis max below min");
  }

  static constexpr Axis naturals(Param lo = 1) { return Axis(lo); }
  static constexpr Axis interval(Param lo, Param hi) { return Axis(lo, hi); }

  constexpr bool finite() const { return max.has_value(); }
  constexpr bool contains(Param p) const { return p >= min && (!max || p <= *max); }

  /// Largest representable element: the max, or the top of the index range.
  constexpr Param last() const { return max ? *max : std::numeric_limits<Param>::max(); }

  /// Number of elements; absent for unbounded axes.
  constexpr std::optional<Param> size() const {
    if (!max) return std::nullopt;
    return *max - min + 1;
  }

  friend constexpr bool operator==(const Axis&, const Axis&) = default;
};

/// Successor on the axis; +inf past the max of a finite axis.
constexpr ExtParam axis_succ(const Axis& axis, Param p) {
  if (p >= axis.last()) return ExtParam::pos_inf();
  return ExtParam(p + 1);
}

/// Predecessor on the axis; -inf below the min.
constexpr ExtParam axis_pred(const Axis& axis, Param p) {
  if (p <= axis.min) return ExtParam::neg_inf();
  return ExtParam(p - 1);
}

}  // namespace bimono
