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

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "bimono.hpp"
#include "oracle.hpp"

namespace bimono {
namespace {

using V = Value128;
using testing::drain;

std::vector<std::pair<int, int>> bounds(const std::vector<LevelInterval<V>>& ivs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& iv : ivs) out.emplace_back(static_cast<int>(iv.lo.raw()), static_cast<int>(iv.hi.raw()));
  return out;
}

TEST(PartitionLevels, Examples) {
  EXPECT_EQ(bounds(partition_levels(V(0), V(100), 4)),
            (std::vector<std::pair<int, int>>{{0, 25}, {25, 50}, {50, 75}, {75, 100}}));
  EXPECT_EQ(bounds(partition_levels(V(0), V(10), 3)), (std::vector<std::pair<int, int>>{{0, 4}, {4, 7}, {7, 10}}));
  EXPECT_EQ(bounds(partition_levels(V(5), V(6), 1)), (std::vector<std::pair<int, int>>{{5, 6}}));
  EXPECT_EQ(partition_levels(V(5), V(7), 10).size(), 2u);
  EXPECT_THROW(partition_levels(V(5), V(5), 1), RangeError);
  EXPECT_THROW(partition_levels(V(0), V(5), 0), RangeError);
}

TEST(PartitionLevels, RandomCoverage) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    int lo = static_cast<int>(rng() % 1000) - 500;
    int hi = lo + 1 + static_cast<int>(rng() % 1000);
    std::size_t parts = 1 + rng() % 40;
    auto ivs = partition_levels(V(lo), V(hi), parts);
    ASSERT_EQ(ivs.front().lo, V(lo));
    ASSERT_EQ(ivs.back().hi, V(hi));
    V smallest = ivs.front().hi - ivs.front().lo;
    V largest = smallest;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      if (i > 0) ASSERT_EQ(ivs[i - 1].hi, ivs[i].lo);
      V w = ivs[i].hi - ivs[i].lo;
      smallest = std::min(smallest, w);
      largest = std::max(largest, w);
    }
    ASSERT_LE(largest - smallest, V(1));
  }
}

TEST(PartitionLevels, BalancedSplitsByPointCount) {
  auto f = parse_polynomial("a^3+b^3").evaluator<V>();
  auto d = BimonotoneDomain::at_most_b();
  auto ivs = partition_levels_balanced(f, d, V(2), V(100000000), 4);
  ASSERT_EQ(ivs.size(), 4u);
  EXPECT_EQ(ivs.front().lo, V(2));
  EXPECT_EQ(ivs.back().hi, V(100000000));
  Count total = count_below(f, d, V(100000000)).n;
  for (const auto& iv : ivs) {
    Count n = count_below(f, d, iv.hi).n - count_below(f, d, iv.lo).n;
    double share = static_cast<double>(n) / static_cast<double>(total);
    EXPECT_NEAR(share, 0.25, 0.01);
  }
}

WorkPlan<V> plan_for(TaskKind kind, const std::string& f, const BimonotoneDomain& d, int lo, int hi, std::size_t parts) {
  WorkPlan<V> plan;
  plan.kind = kind;
  plan.f = parse_polynomial(f).evaluator<V>();
  plan.domain = d;
  plan.intervals = partition_levels(V(lo), V(hi), parts);
  return plan;
}

template <class T>
std::vector<T> merged(const WorkPlan<V>& plan, std::size_t workers, PlanStats* stats = nullptr) {
  std::vector<T> out;
  PlanStats s = run_partitioned<V>(plan, workers, [&](IntervalResult<V>& r) {
    for (auto& x : std::get<std::vector<T>>(r.output)) out.push_back(x);
    return true;
  });
  if (stats) *stats = s;
  return out;
}

TEST(RunPartitioned, KFoldMatchesSingleRun) {
  auto tri = BimonotoneDomain::at_most_b();
  auto plan = plan_for(TaskKind::KFold, "a^3+b^3", tri, 2, 10000, 4);
  auto hits = merged<KFoldHit<V>>(plan, 2);
  auto single = plan_for(TaskKind::KFold, "a^3+b^3", tri, 2, 10000, 1);
  EXPECT_EQ(hits, merged<KFoldHit<V>>(single, 1));
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits.front().value, V(1729));
}

TEST(RunPartitioned, EnumerateGluesWithGlobalOrdinals) {
  auto plane = BimonotoneDomain::rectangle(Axis(), Axis());
  auto plan = plan_for(TaskKind::Enumerate, "a+b", plane, 2, 8, 3);
  auto items = merged<StreamItem<V>>(plan, 1);
  auto whole = enumerate_range<V>(parse_polynomial("a+b").evaluator<V>(), plane, LevelInterval<V>(V(2), V(8)));
  EXPECT_EQ(items, drain(whole));
}

TEST(RunPartitioned, EmptyIntervalContributesNothing) {
  auto plane = BimonotoneDomain::rectangle(Axis(), Axis());
  WorkPlan<V> plan = plan_for(TaskKind::Enumerate, "10a+10b", plane, 0, 60, 1);
  plan.intervals = {LevelInterval<V>(V(0), V(20)), LevelInterval<V>(V(21), V(30)), LevelInterval<V>(V(30), V(60))};
  EXPECT_THROW(plan.validate(), RangeError);
  plan.intervals = {LevelInterval<V>(V(0), V(21)), LevelInterval<V>(V(21), V(30)), LevelInterval<V>(V(30), V(60))};
  std::vector<std::size_t> sizes;
  run_partitioned<V>(plan, 2, [&](IntervalResult<V>& r) {
    sizes.push_back(std::get<std::vector<StreamItem<V>>>(r.output).size());
    return true;
  });
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 0, 9}));
}

TEST(RunPartitioned, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 6; ++round) {
    auto p = testing::random_polynomial(rng);
    auto d = round % 2 ? BimonotoneDomain::at_most_b() : BimonotoneDomain::rectangle(Axis(), Axis());
    int lo = static_cast<int>(rng() % 20);
    int hi = lo + 200 + static_cast<int>(rng() % 3000);
    std::size_t parts = 1 + rng() % 9;
    auto e = plan_for(TaskKind::Enumerate, p.canonical(), d, lo, hi, parts);
    auto c = plan_for(TaskKind::Collide, p.canonical(), d, lo, hi, parts);
    c.g = parse_polynomial("a^2+b^2").evaluator<V>();
    auto k = plan_for(TaskKind::KFold, p.canonical(), d, lo, hi, parts);
    PlanStats stats;
    auto items = merged<StreamItem<V>>(e, 1, &stats);
    auto hits = merged<CollisionHit<V>>(c, 1);
    auto folds = merged<KFoldHit<V>>(k, 1);
    EXPECT_EQ(stats.bound_violations, 0u);
    auto whole = enumerate_range<V>(p.evaluator<V>(), d, LevelInterval<V>(V(lo), V(hi)));
    EXPECT_EQ(items, drain(whole));
    for (std::size_t w : {2u, 4u, 8u}) {
      EXPECT_EQ(merged<StreamItem<V>>(e, w), items);
      EXPECT_EQ(merged<CollisionHit<V>>(c, w), hits);
      EXPECT_EQ(merged<KFoldHit<V>>(k, w), folds);
    }
  }
}

TEST(RunPartitioned, FailingIntervalAfterDrainingEarlierOnes) {
  for (std::size_t workers : {1u, 3u}) {
    WorkPlan<V> plan;
    plan.kind = TaskKind::Enumerate;
    plan.absolute_bound = false;
    plan.f = [](Param a, Param b) {
      if (a + b > 50) throw ValueOverflow("synthetic");
      return V(static_cast<int>(a + b));
    };
    plan.domain = BimonotoneDomain::rectangle(Axis(), Axis());
    plan.intervals = partition_levels(V(0), V(80), 4);
    std::vector<std::size_t> delivered;
    try {
      run_partitioned<V>(plan, workers, [&](IntervalResult<V>& r) {
        delivered.push_back(r.interval);
        return true;
      });
      FAIL() << "expected an interval failure";
    } catch (const IntervalTaskError& e) {
      EXPECT_EQ(e.interval(), 2u);
      EXPECT_THROW(std::rethrow_exception(e.cause()), ValueOverflow);
    }
    EXPECT_EQ(delivered, (std::vector<std::size_t>{0, 1}));
  }
}

TEST(RunOrdered, EarlyStopAndOrder) {
  for (std::size_t workers : {1u, 2u, 5u}) {
    std::vector<std::size_t> seen;
    std::function<std::size_t(std::size_t, const std::atomic<bool>&)> task = [](std::size_t i, const std::atomic<bool>&) {
      return i * i;
    };
    std::function<bool(std::size_t, std::size_t&&)> sink = [&](std::size_t i, std::size_t&& v) {
      EXPECT_EQ(v, i * i);
      seen.push_back(i);
      return i < 6;
    };
    run_ordered<std::size_t>(50, workers, task, sink);
    EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
  }
}

const std::string kCubes = "a^3+b^3";

TEST(Checkpoint, SaveAtLevel1730) {
  auto p = parse_polynomial(kCubes);
  auto e = enumerate_bimonotone<V>(p.evaluator<V>(), BimonotoneDomain::at_most_b());
  while (*e.peek_value() < V(1730)) e.next();
  Checkpoint cp = checkpoint_save(e, p.canonical());
  EXPECT_EQ(cp.level, BigValue(1730));
  EXPECT_EQ(cp.frontier, (std::vector<ParamPair>{{1, 13}, {2, 12}, {8, 11}, {10, 10}}));
  EXPECT_EQ(cp.frontier, construct_minima<V>(p.evaluator<V>(), BimonotoneDomain::at_most_b(), V(1730)));
  EXPECT_EQ(cp.emitted, 62u);
  EXPECT_EQ(format_checkpoint(cp),
            "BIMONO-CKPT 1\nf a^3+b^3\ndomain a<=b\nlevel 1730\nemitted 62\nfrontier 4\n1 13\n2 12\n8 11\n10 10\n");
}

TEST(Checkpoint, RoundTrip) {
  Checkpoint cp{"a^2+3*a*b", "all amax=7", BigValue(-12), 99, {{1, 9}, {4, 3}, {7, 1}}};
  EXPECT_EQ(parse_checkpoint(format_checkpoint(cp)), cp);
  auto path = std::filesystem::temp_directory_path() / "bimono_roundtrip.ckpt";
  write_checkpoint_file(path, cp);
  EXPECT_EQ(read_checkpoint_file(path), cp);
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

CheckpointError::Kind parse_kind(const std::string& text) {
  try {
    parse_checkpoint(text);
  } catch (const CheckpointError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return CheckpointError::Kind::Io;
}

TEST(Checkpoint, RejectsMalformedFiles) {
  const std::string good = "BIMONO-CKPT 1\nf a^3+b^3\ndomain a<=b\nlevel 1730\nemitted 62\nfrontier 2\n1 13\n2 12\n";
  EXPECT_NO_THROW(parse_checkpoint(good));
  using K = CheckpointError::Kind;
  EXPECT_EQ(parse_kind("BIMONO-CKPT 2\n" + good.substr(14)), K::Format);
  EXPECT_EQ(parse_kind(good.substr(0, good.size() - 1)), K::Format);
  EXPECT_EQ(parse_kind(good + "3 11\n"), K::Format);
  EXPECT_EQ(parse_kind("BIMONO-CKPT 1\nf a^3+b^3\ndomain a<=b\nlevel 01730\nemitted 62\nfrontier 0\n"), K::Format);
  EXPECT_EQ(parse_kind("BIMONO-CKPT 1\nf a^3+b^3\ndomain a<=b\nlevel 1730\nemitted  62\nfrontier 0\n"), K::Format);
  EXPECT_EQ(parse_kind("BIMONO-CKPT 1\nf a^3+b^3\ndomain a<=b\nlevel 1730\nemitted 62\nfrontier 3\n1 13\n2 12\n"),
            K::Format);
  EXPECT_EQ(
      parse_kind("BIMONO-CKPT 1\nf a^3+b^3\ndomain a<=b\nlevel 1730\nemitted 62\nfrontier 2\n2 12\n1 13\n"),
      K::CorruptFrontier);
}

TEST(Checkpoint, ResumeChecksCompatibility) {
  auto p = parse_polynomial(kCubes);
  Checkpoint cp{p.canonical(), "a<=b", BigValue(1730), 62, {{1, 13}, {2, 12}, {8, 11}, {10, 10}}};
  auto f = p.evaluator<V>();
  auto kind = [&](const Checkpoint& c, const BimonotoneDomain& d, const std::string& text) {
    try {
      checkpoint_resume<V>(c, f, d, text);
    } catch (const CheckpointError& e) {
      return e.kind();
    }
    return CheckpointError::Kind::Io;
  };
  using K = CheckpointError::Kind;
  EXPECT_EQ(kind(cp, BimonotoneDomain::at_most_b(), "a^3+2*b^3"), K::FunctionMismatch);
  EXPECT_EQ(kind(cp, BimonotoneDomain::at_least_b(), p.canonical()), K::DomainMismatch);
  Checkpoint outside = cp;
  outside.frontier = {{13, 1}};
  EXPECT_EQ(kind(outside, BimonotoneDomain::at_most_b(), p.canonical()), K::CorruptFrontier);
  Checkpoint low = cp;
  low.frontier = {{1, 2}};
  EXPECT_EQ(kind(low, BimonotoneDomain::at_most_b(), p.canonical()), K::Boundary);
}

TEST(Checkpoint, ResumeReproducesSuffix) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 10; ++round) {
    auto p = testing::random_polynomial(rng);
    auto d = round % 3 == 0 ? BimonotoneDomain::at_most_b() : BimonotoneDomain::rectangle(Axis(), Axis());
    auto f = p.evaluator<V>();
    BimonotoneEnumerator<V> ref(f, d);
    auto all = drain(ref, 3000);
    std::size_t stop = 1 + rng() % 2000;
    BimonotoneEnumerator<V> e(f, d);
    drain(e, stop);
    Checkpoint cp = parse_checkpoint(format_checkpoint(checkpoint_save(e, p.canonical())));
    auto resumed = checkpoint_resume<V>(cp, f, d, p.canonical());
    ASSERT_LE(cp.emitted, stop);
    auto tail = drain(resumed, all.size() - cp.emitted);
    ASSERT_EQ(tail.size(), all.size() - cp.emitted);
    for (std::size_t i = 0; i < tail.size(); ++i) ASSERT_EQ(tail[i], all[cp.emitted + i]) << round;
    EXPECT_EQ(resumed.bound_violations(), 0u);
  }
}

TEST(Checkpoint, MidBlockSaveRollsBackToBlockStart) {
  auto p = parse_polynomial("a+b");
  auto f = p.evaluator<V>();
  auto d = BimonotoneDomain::rectangle(Axis(), Axis());
  BimonotoneEnumerator<V> e(f, d);
  drain(e, 5);  // values 2,3,3,4,4: stops inside the block of 4s
  ASSERT_FALSE(e.at_value_boundary());
  Checkpoint cp = checkpoint_save(e, p.canonical());
  EXPECT_EQ(cp.level, BigValue(4));
  EXPECT_EQ(cp.emitted, 3u);
  EXPECT_EQ(cp.frontier, (std::vector<ParamPair>{{1, 3}, {2, 2}, {3, 1}}));
}

}  // namespace
}  // namespace bimono
