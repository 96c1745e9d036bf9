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
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bimono/errors.hpp"

namespace bimono {

/// Signed 128-bit value with overflow-checked arithmetic.
///
/// Every operation that would wrap throws ValueOverflow instead. This is the
/// default value type of all streams; BigValue is the arbitrary-precision
/// alternative behind the same interface.
class Value128 {
 public:
  constexpr Value128() = default;

  template <std::integral T>
  constexpr Value128(T v) : v_(static_cast<__int128>(v)) {}  // NOLINT(implicit)

  static constexpr Value128 from_raw(__int128 v) {
    Value128 out;
    out.v_ = v;
    return out;
  }
  constexpr __int128 raw() const { return v_; }

  static constexpr Value128 max() {
    return from_raw(static_cast<__int128>(~static_cast<unsigned __int128>(0) >> 1));
  }
  static constexpr Value128 min() { return from_raw(-max().v_ - 1); }

  friend constexpr bool operator==(Value128, Value128) = default;
  friend constexpr std::strong_ordering operator<=>(Value128 x, Value128 y) {
    return x.v_ <=> y.v_;
  }

  friend Value128 operator+(Value128 x, Value128 y) {
    __int128 r;
    if (__builtin_add_overflow(x.v_, y.v_, &r)) throw ValueOverflow("128-bit addition overflow");
    return from_raw(r);
  }
  friend Value128 operator-(Value128 x, Value128 y) {
    __int128 r;
    if (__builtin_sub_overflow(x.v_, y.v_, &r)) throw ValueOverflow("128-bit subtraction overflow");
    return from_raw(r);
  }
  friend Value128 operator*(Value128 x, Value128 y) {
    __int128 r;
    if (__builtin_mul_overflow(x.v_, y.v_, &r)) throw ValueOverflow("128-bit multiplication overflow");
    return from_raw(r);
  }
  friend Value128 operator/(Value128 x, Value128 y) {
    if (y.v_ == 0) throw RangeError("division by zero");
    if (y.v_ == -1) return Value128(0) - x;
    return from_raw(x.v_ / y.v_);
  }
  friend Value128 operator%(Value128 x, Value128 y) {
    if (y.v_ == 0) throw RangeError("division by zero");
    if (y.v_ == -1) return Value128(0);
    return from_raw(x.v_ % y.v_);
  }
  Value128& operator+=(Value128 y) { return *this = *this + y; }
  Value128& operator*=(Value128 y) { return *this = *this * y; }

 private:
  __int128 v_ = 0;
};

using BigValue = boost::multiprecision::cpp_int;

/// Unsigned count of domain points; additions are checked.
using Count = unsigned __int128;

std::string to_string(Value128 v);
inline std::string to_string(const BigValue& v) { return v.str(); }
std::string count_to_string(Count n);

/// Converts a non-negative value that fits in 64 bits; throws RangeError
/// otherwise.
inline std::uint64_t to_u64(Value128 v) {
  if (v.raw() < 0 || v.raw() > static_cast<__int128>(~std::uint64_t{0})) throw RangeError("value outside 64-bit range");
  return static_cast<std::uint64_t>(v.raw());
}
inline std::uint64_t to_u64(const BigValue& v) {
  if (v < 0 || v > BigValue(~std::uint64_t{0})) throw RangeError("value outside 64-bit range");
  return v.convert_to<std::uint64_t>();
}

/// Adds with a CountOverflow on wraparound.
inline Count checked_count_add(Count x, Count y) {
  Count r = x + y;
  if (r < x) throw CountOverflow("point count exceeds 128 bits");
  return r;
}

namespace detail {
Value128 parse_value128(std::string_view text);
BigValue parse_big_value(std::string_view text);
}  // namespace detail

/// Parses an optionally signed decimal integer. Throws ParseError on bad
/// syntax and ValueOverflow when the text does not fit in V.
template <class V>
V parse_value(std::string_view text);

template <>
inline Value128 parse_value<Value128>(std::string_view text) {
  return detail::parse_value128(text);
}
template <>
inline BigValue parse_value<BigValue>(std::string_view text) {
  return detail::parse_big_value(text);
}

template <class V>
concept ValueType = requires(V x, V y) {
  { x + y } -> std::convertible_to<V>;
  { x * y } -> std::convertible_to<V>;
  { x < y } -> std::convertible_to<bool>;
  { to_string(x) } -> std::convertible_to<std::string>;
};

}  // namespace bimono
