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

#include "bimono/value.hpp"

#include <algorithm>

namespace bimono {

namespace {

std::string unsigned_digits(unsigned __int128 u) {
  if (u == 0) return "0";
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Splits an optional sign from the digits; rejects empty or non-digit text.
std::string_view split_sign(std::string_view text, bool& negative) {
  negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError(ParseError::Kind::Syntax, 0, "empty integer");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError(ParseError::Kind::Syntax, i, "invalid digit in integer '" + std::string(text) + "'");
    }
  }
  return text;
}

}  // namespace

std::string to_string(Value128 v) {
  __int128 r = v.raw();
  if (r >= 0) return unsigned_digits(static_cast<unsigned __int128>(r));
  // Two's-complement negation in unsigned space handles the minimum value.
  return "-" + unsigned_digits(~static_cast<unsigned __int128>(r) + 1);
}

std::string count_to_string(Count n) { return unsigned_digits(n); }

namespace detail {

Value128 parse_value128(std::string_view text) {
  bool negative = false;
  std::string_view digits = split_sign(text, negative);
  unsigned __int128 limit = static_cast<unsigned __int128>(Value128::max().raw()) + (negative ? 1 : 0);
  unsigned __int128 acc = 0;
  for (char c : digits) {
    unsigned d = static_cast<unsigned>(c - '0');
    if (acc > (limit - d) / 10) throw ValueOverflow("integer '" + std::string(text) + "' exceeds 128 bits");
    acc = acc * 10 + d;
  }
  if (negative) return Value128::from_raw(static_cast<__int128>(~acc + 1));
  return Value128::from_raw(static_cast<__int128>(acc));
}

BigValue parse_big_value(std::string_view text) {
  bool negative = false;
  std::string_view digits = split_sign(text, negative);
  BigValue v{std::string(digits)};
  return negative ? BigValue(-v) : v;
}

}  // namespace detail
}  // namespace bimono
