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

#include <map>
#include <random>

#include <gtest/gtest.h>

#include "bimono.hpp"
#include "oracle.hpp"

namespace bimono {
namespace {

using V = Value128;
using testing::brute_sorted;
using testing::drain;

std::vector<V> values(const std::vector<StreamItem<V>>& items) {
  std::vector<V> out;
  for (const auto& i : items) out.push_back(i.value);
  return out;
}

std::vector<ParamPair> params(const std::vector<StreamItem<V>>& items) {
  std::vector<ParamPair> out;
  for (const auto& i : items) out.emplace_back(i.a, i.b);
  return out;
}

void expect_well_formed(const std::vector<StreamItem<V>>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    ASSERT_EQ(items[i].ordinal, i + 1);
    if (i > 0) ASSERT_FALSE(items[i].value < items[i - 1].value);
  }
}

std::vector<V> vals(std::initializer_list<int> xs) {
  std::vector<V> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

TEST(SortedGeneric, SortsByValueThenBThenA) {
  auto f = parse_polynomial("a+b").evaluator<V>();
  std::vector<ParamPair> pts{{1, 1}, {2, 1}, {1, 2}};
  SortedGenericStream<V> s(f, pts);
  auto items = drain(s);
  EXPECT_EQ(values(items), vals({2, 3, 3}));
  EXPECT_EQ(params(items), pts);
}

TEST(SortedGeneric, ConstantFunctionUsesTieBreakOnly) {
  Evaluator<V> zero = [](Param, Param) { return V(0); };
  std::vector<ParamPair> pts{{2, 2}, {1, 2}, {2, 1}, {1, 1}};
  SortedGenericStream<V> s(zero, pts);
  EXPECT_EQ(params(drain(s)), (std::vector<ParamPair>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}));
}

TEST(SortedGeneric, MatchesBimonotonePrefix) {
  auto f = parse_polynomial("a^3+b^3").evaluator<V>();
  std::vector<ParamPair> pts;
  for (Param a = 1; a <= 5; ++a)
    for (Param b = 1; b <= 5; ++b) pts.emplace_back(a, b);
  SortedGenericStream<V> generic(f, pts);
  BimonotoneEnumerator<V> bi(f, BimonotoneDomain::rectangle(Axis(1, 5), Axis(1, 5)));
  EXPECT_EQ(drain(generic), drain(bi, 25));
}

TEST(SemimonotoneFinite, WorkedExample) {
  Evaluator<V> f = [](Param a, Param b) {
    static const int h[] = {0, 2, 0, 1};
    return V(3 * static_cast<int>(a) + h[b]);
  };
  SemimonotoneFiniteStream<V> s(f, Axis(1, 2), {1, 2, 3});
  auto items = drain(s);
  EXPECT_EQ(values(items), vals({3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(params(items), (std::vector<ParamPair>{{1, 2}, {1, 3}, {1, 1}, {2, 2}, {2, 3}, {2, 1}}));
  EXPECT_LE(s.peak(), 3u);
}

TEST(SemimonotoneFinite, SingleRowEnumeratesA) {
  SemimonotoneFiniteStream<V> s(parse_polynomial("a+b").evaluator<V>(), Axis(1, 6), {4});
  auto items = drain(s);
  ASSERT_EQ(items.size(), 6u);
  for (std::size_t i = 0; i < items.size(); ++i) EXPECT_EQ(items[i].a, i + 1);
}

TEST(SemimonotoneFinite, SingleColumnHeapSortsB) {
  Evaluator<V> f = [](Param, Param b) {
    int d = static_cast<int>(b) - 3;
    return V(d * d);
  };
  SemimonotoneFiniteStream<V> s(f, Axis(1, 1), {1, 2, 3, 4, 5});
  EXPECT_EQ(values(drain(s)), vals({0, 1, 1, 4, 4}));
}

TEST(SemimonotoneAdaptive, FirstValues) {
  SemimonotoneAdaptiveStream<V> s(parse_polynomial("a+2b").evaluator<V>(), Axis(), Axis());
  EXPECT_EQ(values(drain(s, 6)), vals({3, 4, 5, 5, 6, 6}));
}

TEST(SemimonotoneAdaptive, QueueAtMostNPlusOne) {
  SemimonotoneAdaptiveStream<V> s(parse_polynomial("a+b").evaluator<V>(), Axis(), Axis());
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    s.next();
    ASSERT_LE(s.queue_size(), n + 1);
  }
}

TEST(SemimonotoneAdaptive, MatchesGenericOnFiniteAxes) {
  auto f = parse_polynomial("3a+b").evaluator<V>();
  std::vector<ParamPair> pts;
  for (Param a = 1; a <= 3; ++a)
    for (Param b = 1; b <= 3; ++b) pts.emplace_back(a, b);
  SortedGenericStream<V> generic(f, pts);
  SemimonotoneAdaptiveStream<V> s(f, Axis(1, 3), Axis(1, 3));
  EXPECT_EQ(drain(s), drain(generic));
}

TEST(Bimonotone, SmallSquare) {
  BimonotoneEnumerator<V> e(parse_polynomial("a+b").evaluator<V>(), BimonotoneDomain::rectangle(Axis(1, 3), Axis(1, 3)));
  auto items = drain(e);
  EXPECT_EQ(params(items),
            (std::vector<ParamPair>{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}, {3, 2}, {2, 3}, {3, 3}}));
  EXPECT_EQ(values(items), vals({2, 3, 3, 4, 4, 4, 5, 5, 6}));
}

TEST(Bimonotone, LexicographicWhenAdominates) {
  BimonotoneEnumerator<V> e(parse_polynomial("3a+b").evaluator<V>(),
                            BimonotoneDomain::rectangle(Axis(1, 3), Axis(1, 3)));
  auto items = drain(e);
  auto p = params(items);
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
  EXPECT_EQ(e.peak(), 2u);
}

TEST(Bimonotone, CubesOnTriangle) {
  BimonotoneEnumerator<V> e(parse_polynomial("a^3+b^3").evaluator<V>(), BimonotoneDomain::at_most_b());
  auto items = drain(e, 5);
  EXPECT_EQ(values(items), vals({2, 9, 16, 28, 35}));
  EXPECT_EQ(params(items), (std::vector<ParamPair>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}}));
}

TEST(Bimonotone, BijectionOnFiniteDomains) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 20; ++round) {
    Param k = 1 + rng() % 15;
    Param l = 1 + rng() % 15;
    auto f = testing::random_polynomial(rng).evaluator<V>();
    for (const auto& d : {BimonotoneDomain::rectangle(Axis(1, k), Axis(1, l)),
                          BimonotoneDomain::at_most_b(Axis(1, std::min(k, l)), Axis(1, std::max(k, l))),
                          BimonotoneDomain::at_least_b(Axis(1, std::max(k, l)), Axis(1, std::min(k, l)))}) {
      BimonotoneEnumerator<V> e(f, d);
      auto items = drain(e);
      expect_well_formed(items);
      std::map<ParamPair, int> seen;
      for (auto p : params(items)) ++seen[p];
      std::size_t expected = 0;
      for (Param a = 1; a <= d.axis_a().last(); ++a)
        for (Param b = 1; b <= d.axis_b().last(); ++b)
          if (d.contains(a, b)) {
            ++expected;
            EXPECT_EQ((seen[ParamPair(a, b)]), 1);
          }
      EXPECT_EQ(items.size(), expected);
    }
  }
}

TEST(Bimonotone, OracleEquivalenceOnRandomPolynomials) {
  std::mt19937_64 rng(20);
  for (int round = 0; round < 20; ++round) {
    auto f = testing::random_polynomial(rng).evaluator<V>();
    Param k = 1 + rng() % 50;
    Param l = 1 + rng() % 50;
    auto rect = BimonotoneDomain::rectangle(Axis(1, k), Axis(1, l));
    BimonotoneEnumerator<V> e(f, rect);
    auto got = drain(e);
    auto want = brute_sorted(f, rect, k, l);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      ASSERT_EQ(got[i].value, want[i].value);
      ASSERT_EQ(ParamPair(got[i].a, got[i].b), ParamPair(want[i].a, want[i].b));
    }
    auto tri = BimonotoneDomain::at_most_b(Axis(1, k), Axis(1, k));
    BimonotoneEnumerator<V> t(f, tri);
    auto got_t = drain(t);
    auto want_t = brute_sorted(f, tri, k, k);
    ASSERT_EQ(got_t.size(), want_t.size());
    for (std::size_t i = 0; i < got_t.size(); ++i) {
      ASSERT_EQ(got_t[i].value, want_t[i].value);
      ASSERT_EQ(ParamPair(got_t[i].a, got_t[i].b), ParamPair(want_t[i].a, want_t[i].b));
    }
  }
}

TEST(Bimonotone, SqrtBoundAfterEveryOutput) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 10; ++round) {
    auto f = testing::random_polynomial(rng, 4).evaluator<V>();
    BimonotoneEnumerator<V> e(f, round % 2 ? BimonotoneDomain::at_most_b() : BimonotoneDomain::rectangle(Axis(), Axis()));
    for (int i = 0; i < 20000; ++i) {
      auto item = e.next();
      ASSERT_TRUE(within_sqrt_bound(e.frontier().size(), item->ordinal));
    }
    EXPECT_EQ(e.bound_violations(), 0u);
  }
}

TEST(Bimonotone, WorstCaseDiagonal) {
  const Param k = 30;
  const Param l = 20;
  BimonotoneEnumerator<V> e(parse_polynomial("a+b").evaluator<V>(), BimonotoneDomain::rectangle(Axis(1, k), Axis(1, l)));
  while (e.peek_value() && !(V(static_cast<int>(l)) < *e.peek_value())) e.next();
  std::vector<ParamPair> diag;
  for (Param a = 1; a <= l; ++a) diag.emplace_back(a, l + 1 - a);
  EXPECT_EQ(e.frontier().pairs(), diag);
}

TEST(Bimonotone, MaxKeepsFrontierTiny) {
  BimonotoneEnumerator<V> e(max_evaluator<V>(), BimonotoneDomain::rectangle(Axis(), Axis()));
  for (int i = 0; i < 100000; ++i) e.next();
  EXPECT_LE(e.peak(), 4u);
}

TEST(Bimonotone, FrontierIsSubsetOfSemimonotoneQueue) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 10; ++round) {
    auto f = testing::random_polynomial(rng, 3).evaluator<V>();
    V z(static_cast<int>(5 + rng() % 400));
    BimonotoneEnumerator<V> bi(f, BimonotoneDomain::rectangle(Axis(), Axis()));
    SemimonotoneAdaptiveStream<V> semi(f, Axis(), Axis());
    while (*bi.peek_value() < z) bi.next();
    while (*semi.peek_value() < z) semi.next();
    auto pending = semi.pending_pairs();
    for (auto p : bi.frontier().pairs()) {
      EXPECT_TRUE(std::binary_search(pending.begin(), pending.end(), p)) << p.first << "," << p.second;
    }
  }
}

TEST(Bimonotone, ContractViolationsAreRecorded) {
  Evaluator<V> bad = [](Param a, Param b) {
    int d = static_cast<int>(a) - 5;
    return V(d * d + static_cast<int>(b));
  };
  EnumeratorOptions<V> opts;
  opts.check_contracts = true;
  BimonotoneEnumerator<V> e(bad, BimonotoneDomain::rectangle(Axis(1, 10), Axis(1, 10)), opts);
  drain(e);
  EXPECT_FALSE(e.contract_violations().empty());
}

TEST(MonotonicityDetector, Examples) {
  auto cubes = parse_polynomial("a^3+b^3").evaluator<V>();
  auto plane = BimonotoneDomain::rectangle(Axis(), Axis());
  EXPECT_TRUE(detect_monotonicity_violation(cubes, plane, 20, 20).empty());
  EXPECT_TRUE(detect_monotonicity_violation(max_evaluator<V>(), plane, 50, 50).empty());

  Evaluator<V> bowl = [](Param a, Param b) {
    int d = static_cast<int>(a) - 5;
    return V(d * d + static_cast<int>(b));
  };
  auto report = detect_monotonicity_violation(bowl, plane, 10, 10);
  ASSERT_FALSE(report.empty());
  std::set<Param> rows;
  for (const auto& v : report) {
    EXPECT_EQ(v.direction, MonotonicityViolation::Direction::AlongA);
    rows.insert(v.a);
  }
  EXPECT_EQ(rows, (std::set<Param>{1, 2, 3, 4}));
}

TEST(Bimonotone, BigValueBackendAgrees) {
  auto p = parse_polynomial("a^3+2ab+b^2");
  BimonotoneEnumerator<V> small(p.evaluator<V>(), BimonotoneDomain::at_most_b());
  BimonotoneEnumerator<BigValue> big(p.evaluator<BigValue>(), BimonotoneDomain::at_most_b());
  for (int i = 0; i < 5000; ++i) {
    auto x = small.next();
    auto y = big.next();
    ASSERT_EQ(to_string(x->value), to_string(y->value));
    ASSERT_EQ(x->a, y->a);
    ASSERT_EQ(x->b, y->b);
  }
}

TEST(Bimonotone, OverflowSurfaces) {
  BimonotoneEnumerator<V> e(parse_polynomial("a^60+b^60").evaluator<V>(), BimonotoneDomain::rectangle(Axis(), Axis()));
  EXPECT_THROW(drain(e, 10), ValueOverflow);
}

}  // namespace
}  // namespace bimono
