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
#include <string_view>
#include <utility>
#include <vector>

#include "bimono/domain.hpp"
#include "bimono/evaluator.hpp"

namespace bimono {

/// c * a^i * b^j with c > 0.
struct Term {
  std::uint64_t coeff;
  unsigned i;
  unsigned j;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in a and b with non-negative integer coefficients, which makes
/// it bimonotone on any product of non-negative integer axes. Terms are kept
/// merged and sorted by (i, j) descending.
class Polynomial {
 public:
  static constexpr unsigned kMaxExponent = 64;

  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Support K = { (i,j) : c_ij != 0 }.
  std::vector<std::pair<unsigned, unsigned>> support() const;

  /// Degree of f(a, 0): the largest i among pure a-terms (0 if none).
  unsigned degree_a() const;
  /// Degree of f(0, b).
  unsigned degree_b() const;
  unsigned total_degree() const;

  /// A pure a-power with i >= 1 exists (needed for properness along an
  /// unbounded A axis); likewise for b.
  bool has_pure_a() const;
  bool has_pure_b() const;

  /// Canonical text, e.g. "a^4+a^3*b^4+b^5". parse(canonical()) == *this.
  std::string canonical() const;

  template <class V>
  V evaluate(Param a, Param b) const {
    V sum(0);
    for (const Term& t : terms_) {
      V term = t.i != 0 ? checked_pow(V(a), t.i) : V(t.coeff);
      if (t.j != 0) term = term * checked_pow(V(b), t.j);
      if (t.i != 0 && t.coeff != 1) term = term * V(t.coeff);
      sum = sum + term;
    }
    return sum;
  }

  template <class V>
  Evaluator<V> evaluator() const {
    return [terms = *this](Param a, Param b) { return terms.template evaluate<V>(a, b); };
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Grammar: a sum of terms, each a product of factors `N`, `a`, `b`,
/// optionally raised with `^k`; `*` between factors is optional and
/// whitespace is ignored. Like terms are merged and zero terms dropped.
///
/// Throws ParseError: Syntax (with position), NegativeCoefficient for any
/// minus sign, Limit for exponents above 64 or coefficients above 2^64-1.
Polynomial parse_polynomial(std::string_view text);

/// Throws ParseError::Improper unless the polynomial has a pure power of
/// every unbounded variable. Finite axes waive the requirement.
void require_proper(const Polynomial& p, const BimonotoneDomain& d);

}  // namespace bimono
