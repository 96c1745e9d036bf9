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

// Brute-force reference implementations used as test oracles. Everything
// here works by exhaustive enumeration of a finite window.

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "bimono.hpp"

namespace bimono::testing {

template <class V>
struct RefItem {
  V value;
  Param a;
  Param b;
};

/// All domain points inside [amin, a_hi] x [bmin, b_hi], sorted by (value, b, a).
template <class V>
std::vector<RefItem<V>> brute_sorted(const Evaluator<V>& f, const BimonotoneDomain& d, Param a_hi, Param b_hi) {
  std::vector<RefItem<V>> out;
  for (Param a = d.axis_a().min; a <= std::min(a_hi, d.axis_a().last()); ++a) {
    for (Param b = d.axis_b().min; b <= std::min(b_hi, d.axis_b().last()); ++b) {
      if (d.contains(a, b)) out.push_back({f(a, b), a, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const RefItem<V>& x, const RefItem<V>& y) {
    if (x.value != y.value) return x.value < y.value;
    return std::tie(x.b, x.a) < std::tie(y.b, y.a);
  });
  return out;
}

/// Minimal elements of { x in window : pred(x) } under the componentwise
/// order, sorted by a.
template <class Pred>
std::vector<ParamPair> brute_minima(const BimonotoneDomain& d, Param a_hi, Param b_hi, Pred&& pred) {
  std::vector<ParamPair> set;
  for (Param a = d.axis_a().min; a <= std::min(a_hi, d.axis_a().last()); ++a) {
    for (Param b = d.axis_b().min; b <= std::min(b_hi, d.axis_b().last()); ++b) {
      if (d.contains(a, b) && pred(a, b)) set.emplace_back(a, b);
    }
  }
  std::vector<ParamPair> out;
  for (auto x : set) {
    bool minimal = std::none_of(set.begin(), set.end(), [&](ParamPair y) {
      return y != x && y.first <= x.first && y.second <= x.second;
    });
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random polynomial with non-negative coefficients and pure powers of
/// both variables, so it is proper on every domain.
inline Polynomial random_polynomial(std::mt19937_64& rng, unsigned max_exp = 3, unsigned max_coeff = 4) {
  std::uniform_int_distribution<unsigned> e(1, max_exp);
  std::uniform_int_distribution<unsigned> e0(0, max_exp);
  std::uniform_int_distribution<std::uint64_t> c(1, max_coeff);
  std::uniform_int_distribution<int> extra(0, 3);
  std::vector<Term> terms{{c(rng), e(rng), 0}, {c(rng), 0, e(rng)}};
  for (int i = extra(rng); i > 0; --i) terms.push_back({c(rng), e0(rng), e0(rng)});
  return Polynomial(terms);
}

/// Drains a stream into a vector.
template <class V>
std::vector<StreamItem<V>> drain(Stream<V>& s, std::size_t cap = static_cast<std::size_t>(-1)) {
  std::vector<StreamItem<V>> out;
  while (out.size() < cap) {
    auto item = s.next();
    if (!item) break;
    out.push_back(std::move(*item));
  }
  return out;
}

}  // namespace bimono::testing
