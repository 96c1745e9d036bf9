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
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "bimono/polynomial.hpp"

namespace bimono {

using Rational = boost::rational<std::int64_t>;

/// Growth exponents of the sublevel sets of a polynomial:
/// #{ f <= z } grows like z^delta * log(z)^d.
struct TropicalResult {
  Rational delta;
  int d = 0;  // 1 when the maximum is attained on a segment
  std::vector<std::pair<Rational, Rational>> optimal_vertices;

  std::string to_string() const;
};

/// Maximizes u + v over D = { (u,v) : i*u + j*v <= 1 for all (i,j) in K }
/// by enumerating vertices of D exactly. Throws ParseError::Improper when
/// the maximum is unbounded, which happens iff a pure power of a or of b
/// is missing.
TropicalResult tropical_delta(const Polynomial& p);

}  // namespace bimono
