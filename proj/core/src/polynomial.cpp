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

#include "bimono/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bimono {

Polynomial::Polynomial(std::vector<Term> terms) {
  std::map<std::pair<unsigned, unsigned>, unsigned __int128, std::greater<>> merged;
  for (const Term& t : terms) {
    if (t.i > kMaxExponent || t.j > kMaxExponent) {
      throw ParseError(ParseError::Kind::Limit, 0, "exponent above " + std::to_string(kMaxExponent));
    }
    if (t.coeff != 0) merged[{t.i, t.j}] += t.coeff;
  }
  for (const auto& [ij, c] : merged) {
    if (c > ~std::uint64_t{0}) throw ParseError(ParseError::Kind::Limit, 0, "merged coefficient exceeds 64 bits");
    terms_.push_back(Term{static_cast<std::uint64_t>(c), ij.first, ij.second});
  }
}

std::vector<std::pair<unsigned, unsigned>> Polynomial::support() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const Term& t : terms_) out.emplace_back(t.i, t.j);
  return out;
}

unsigned Polynomial::degree_a() const {
  unsigned d = 0;
  for (const Term& t : terms_) {
    if (t.j == 0) d = std::max(d, t.i);
  }
  return d;
}

unsigned Polynomial::degree_b() const {
  unsigned d = 0;
  for (const Term& t : terms_) {
    if (t.i == 0) d = std::max(d, t.j);
  }
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.i + t.j);
  return d;
}

bool Polynomial::has_pure_a() const { return degree_a() >= 1; }
bool Polynomial::has_pure_b() const { return degree_b() >= 1; }

std::string Polynomial::canonical() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    std::string factors;
    auto add = [&factors](const std::string& f) {
      if (!factors.empty()) factors += '*';
      factors += f;
    };
    if (t.coeff != 1 || (t.i == 0 && t.j == 0)) add(std::to_string(t.coeff));
    if (t.i == 1) add("a");
    else if (t.i > 1) add("a^" + std::to_string(t.i));
    if (t.j == 1) add("b");
    else if (t.j > 1) add("b^" + std::to_string(t.j));
    out += factors;
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    auto minus = text_.find('-');
    if (minus != std::string_view::npos) {
      throw ParseError(ParseError::Kind::NegativeCoefficient, minus, "negative coefficients are not allowed");
    }
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    terms.push_back(term());
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+') fail(std::string("expected '+' but found '") + peek() + "'");
      ++pos_;
      terms.push_back(term());
    }
    return Polynomial(std::move(terms));
  }

 private:
  Term term() {
    unsigned __int128 coeff = 1;
    unsigned i = 0;
    unsigned j = 0;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (any && c == '*') {
        ++pos_;
        skip_space();
        if (at_end()) fail("factor expected after '*'");
        c = peek();
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        unsigned __int128 n = number();
        unsigned e = exponent();
        for (unsigned k = 0; k < e; ++k) {
          coeff *= n;
          if (coeff > ~std::uint64_t{0}) throw ParseError(ParseError::Kind::Limit, start, "coefficient exceeds 64 bits");
        }
      } else if (c == 'a' || c == 'b') {
        std::size_t start = pos_;
        ++pos_;
        unsigned e = exponent();
        unsigned& slot = c == 'a' ? i : j;
        slot += e;
        if (slot > Polynomial::kMaxExponent) {
          throw ParseError(ParseError::Kind::Limit, start, "exponent above " + std::to_string(Polynomial::kMaxExponent));
        }
      } else if (c == '+' && any) {
        break;
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      any = true;
    }
    if (!any) fail("term expected");
    return Term{static_cast<std::uint64_t>(coeff), i, j};
  }

  unsigned __int128 number() {
    std::size_t start = pos_;
    unsigned __int128 n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + static_cast<unsigned>(peek() - '0');
      if (n > ~std::uint64_t{0}) throw ParseError(ParseError::Kind::Limit, start, "coefficient exceeds 64 bits");
      ++pos_;
    }
    return n;
  }

  unsigned exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected after '^'");
    std::size_t start = pos_;
    unsigned __int128 e = number();
    if (e > Polynomial::kMaxExponent) {
      throw ParseError(ParseError::Kind::Limit, start, "exponent above " + std::to_string(Polynomial::kMaxExponent));
    }
    return static_cast<unsigned>(e);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, msg + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

void require_proper(const Polynomial& p, const BimonotoneDomain& d) {
  if (!d.axis_a().finite() && !p.has_pure_a()) {
    throw ParseError(ParseError::Kind::Improper, 0, "improper on an unbounded A axis: no pure a^i term with i >= 1");
  }
  if (!d.axis_b().finite() && !p.has_pure_b()) {
    throw ParseError(ParseError::Kind::Improper, 0, "improper on an unbounded B axis: no pure b^j term with j >= 1");
  }
}

}  // namespace bimono
