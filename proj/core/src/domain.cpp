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

#include "bimono/domain.hpp"

#include <algorithm>

namespace bimono {

namespace {

std::string axis_suffix(const Axis& a, const Axis& b) {
  std::string out;
  if (a.min != 1) out += " amin=" + std::to_string(a.min);
  if (b.min != 1) out += " bmin=" + std::to_string(b.min);
  if (a.max) out += " amax=" + std::to_string(*a.max);
  if (b.max) out += " bmax=" + std::to_string(*b.max);
  return out;
}

}  // namespace

BimonotoneDomain::BimonotoneDomain(Axis a, Axis b, Shape shape, std::string name)
    : a_(a), b_(b), shape_(shape), name_(std::move(name)) {}

BimonotoneDomain::BimonotoneDomain(Axis a, Axis b, Bound alpha, Bound beta, std::string name)
    : a_(a), b_(b), shape_(Shape::Custom), alpha_(std::move(alpha)), beta_(std::move(beta)), name_(std::move(name)) {
  if (!alpha_ || !beta_) throw DomainError("bounding functions must be callable");
}

BimonotoneDomain BimonotoneDomain::rectangle(Axis a, Axis b) {
  return BimonotoneDomain(a, b, Shape::Rectangle, "all" + axis_suffix(a, b));
}

BimonotoneDomain BimonotoneDomain::at_most_b(Axis a, Axis b) {
  if (a.min != b.min) throw DomainError("a<=b needs both axes to start at the same minimum");
  if (a.max && b.max && *b.max < *a.max) throw DomainError("a<=b needs amax <= bmax");
  if (!a.max && b.max) throw DomainError("a<=b with a finite B axis needs a finite A axis");
  return BimonotoneDomain(a, b, Shape::AtMostB, "a<=b" + axis_suffix(a, b));
}

BimonotoneDomain BimonotoneDomain::at_least_b(Axis a, Axis b) {
  if (a.min != b.min) throw DomainError("a>=b needs both axes to start at the same minimum");
  if (a.max && b.max && *a.max < *b.max) throw DomainError("a>=b needs bmax <= amax");
  if (!b.max && a.max) throw DomainError("a>=b with a finite A axis needs a finite B axis");
  return BimonotoneDomain(a, b, Shape::AtLeastB, "a>=b" + axis_suffix(a, b));
}

std::vector<DomainViolation> validate_domain_window(const BimonotoneDomain& d, Param a_hi, Param b_hi) {
  using Rule = DomainViolation::Rule;
  std::vector<DomainViolation> out;
  const Axis& A = d.axis_a();
  const Axis& B = d.axis_b();
  a_hi = std::min(a_hi, A.last());
  b_hi = std::min(b_hi, B.last());

  for (Param a = A.min; a <= a_hi; ++a) {
    Param al = d.alpha(a);
    if (!B.contains(al)) {
      out.push_back({Rule::AlphaRange, a, "alpha(" + std::to_string(a) + ")=" + std::to_string(al) + " outside B"});
      continue;
    }
    if (a < a_hi) {
      Param next = d.alpha(a + 1);
      if (al > next) {
        out.push_back({Rule::AlphaMonotone, a,
                       "alpha(" + std::to_string(a) + ")=" + std::to_string(al) + " > alpha(" + std::to_string(a + 1) +
                           ")=" + std::to_string(next)});
      }
    }
    Param back = d.beta(al);
    if (back > a || (back == a && a != A.min)) {
      out.push_back({Rule::BetaAlpha, a,
                     "beta(alpha(" + std::to_string(a) + "))=" + std::to_string(back) + " violates beta(alpha(a)) < a"});
    }
  }

  for (Param b = B.min; b <= b_hi; ++b) {
    Param be = d.beta(b);
    if (!A.contains(be)) {
      out.push_back({Rule::BetaRange, b, "beta(" + std::to_string(b) + ")=" + std::to_string(be) + " outside A"});
      continue;
    }
    if (b < b_hi) {
      Param next = d.beta(b + 1);
      if (be > next) {
        out.push_back({Rule::BetaMonotone, b,
                       "beta(" + std::to_string(b) + ")=" + std::to_string(be) + " > beta(" + std::to_string(b + 1) +
                           ")=" + std::to_string(next)});
      }
    }
    Param back = d.alpha(be);
    if (back > b || (back == b && b != B.min)) {
      out.push_back({Rule::AlphaBeta, b,
                     "alpha(beta(" + std::to_string(b) + "))=" + std::to_string(back) + " violates alpha(beta(b)) < b"});
    }
  }
  return out;
}

}  // namespace bimono
