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

#include "bimono/tropical.hpp"

#include <algorithm>

namespace bimono {

std::string TropicalResult::to_string() const {
  return "delta=" + std::to_string(delta.numerator()) + "/" + std::to_string(delta.denominator()) +
         " d=" + std::to_string(d);
}

TropicalResult tropical_delta(const Polynomial& p) {
  if (!p.has_pure_a() || !p.has_pure_b()) {
    throw ParseError(ParseError::Kind::Improper, 0, "delta is unbounded without pure powers of both a and b");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;
  for (const Term& t : p.terms()) {
    if (t.i + t.j > 0) rows.emplace_back(t.i, t.j);
  }

  auto feasible = [&rows](const Rational& u, const Rational& v) {
    return std::all_of(rows.begin(), rows.end(),
                       [&](const auto& r) { return Rational(r.first) * u + Rational(r.second) * v <= Rational(1); });
  };

  TropicalResult out;
  bool found = false;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = x + 1; y < rows.size(); ++y) {
      auto [i1, j1] = rows[x];
      auto [i2, j2] = rows[y];
      std::int64_t det = i1 * j2 - i2 * j1;
      if (det == 0) continue;
      Rational u(j2 - j1, det);
      Rational v(i1 - i2, det);
      if (!feasible(u, v)) continue;
      Rational s = u + v;
      std::pair<Rational, Rational> vertex{u, v};
      if (!found || s > out.delta) {
        out.delta = s;
        out.optimal_vertices = {vertex};
        found = true;
      } else if (s == out.delta &&
                 std::find(out.optimal_vertices.begin(), out.optimal_vertices.end(), vertex) ==
                     out.optimal_vertices.end()) {
        out.optimal_vertices.push_back(vertex);
      }
    }
  }
  if (!found) throw ParseError(ParseError::Kind::Improper, 0, "polygon has no vertex");
  std::sort(out.optimal_vertices.begin(), out.optimal_vertices.end());
  out.d = out.optimal_vertices.size() > 1 ? 1 : 0;
  return out;
}

}  // namespace bimono
