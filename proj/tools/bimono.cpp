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

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bimono.hpp"

namespace {

using namespace bimono;

volatile std::sig_atomic_t g_interrupted = 0;

extern "C" void on_sigint(int) { g_interrupted = 1; }

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOverflow = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCheckpoint = 4;
constexpr int kExitInterrupted = 130;

struct Options {
  std::string f;
  std::string g;
  std::string domain = "all";
  Param min = 1;
  std::optional<Param> amax;
  std::optional<Param> bmax;
  std::optional<std::string> from;
  std::optional<std::string> below;
  std::optional<std::string> level;
  std::optional<std::uint64_t> limit;
  std::size_t workers = 1;
  std::size_t parts = 0;
  std::string split = "uniform";
  std::optional<std::string> checkpoint;
  std::optional<std::string> resume;
  bool bigint = false;
  bool stats = false;
  std::size_t k = 2;
  std::uint64_t n_max = 1000000;
  std::uint64_t every = 1000;
  std::string algorithm = "bimonotone";
};

/// A parsed --f/--g argument: a polynomial or one of the named functions.
struct Function {
  std::string text;
  std::optional<Polynomial> poly;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Function parse_function(const std::string& raw, const BimonotoneDomain& d) {
  std::string expr = trim(raw);
  if (expr.empty()) throw ParseError(ParseError::Kind::Syntax, 0, "missing function, pass --f");
  if (expr == "max") return Function{"max", std::nullopt};
  const std::string named = "sum-of-powers";
  if (expr.compare(0, named.size(), named) == 0) {
    std::istringstream in(expr.substr(named.size()));
    unsigned alpha = 0;
    unsigned beta = 0;
    std::string rest;
    if (!(in >> alpha >> beta) || (in >> rest) || alpha == 0 || beta == 0) {
      throw ParseError(ParseError::Kind::Syntax, named.size(), "usage: sum-of-powers <alpha> <beta>");
    }
    Polynomial p({Term{1, alpha, 0}, Term{1, 0, beta}});
    return Function{p.canonical(), p};
  }
  Polynomial p = parse_polynomial(expr);
  require_proper(p, d);
  return Function{p.canonical(), p};
}

template <class V>
Evaluator<V> make_evaluator(const Function& fn) {
  if (fn.poly) return fn.poly->template evaluator<V>();
  return max_evaluator<V>();
}

BimonotoneDomain make_domain(const Options& o) {
  Axis a(o.min, o.amax);
  Axis b(o.min, o.bmax);
  if (o.domain == "all") return BimonotoneDomain::rectangle(a, b);
  if (o.domain == "a<=b") return BimonotoneDomain::at_most_b(a, b);
  if (o.domain == "a>=b") return BimonotoneDomain::at_least_b(a, b);
  throw DomainError("unknown domain '" + o.domain + "' (expected all, a<=b or a>=b)");
}

/// Buffered writer for standard output.
class Out {
 public:
  ~Out() { flush(); }
  Out& operator<<(const std::string& s) {
    buf_ += s;
    if (buf_.size() > (1u << 16)) flush();
    return *this;
  }
  Out& operator<<(char c) {
    buf_ += c;
    return *this;
  }
  Out& operator<<(std::uint64_t x) { return *this << std::to_string(x); }
  void flush() {
    std::fwrite(buf_.data(), 1, buf_.size(), stdout);
    std::fflush(stdout);
    buf_.clear();
  }

 private:
  std::string buf_;
};

std::string pair_text(const ParamPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

template <class V>
struct Context {
  Options o;
  BimonotoneDomain d;
  Function fn;
  Evaluator<V> f;

  explicit Context(const Options& opts)
      : o(opts), d(make_domain(opts)), fn(parse_function(opts.f, d)), f(make_evaluator<V>(fn)) {}

  V minimum() const { return f(d.axis_a().min, d.axis_b().min); }
  V lower() const { return o.from ? parse_value<V>(*o.from) : minimum(); }
  std::optional<V> upper() const {
    if (!o.below) return std::nullopt;
    return parse_value<V>(*o.below);
  }
  bool partitioned() const {
    if (o.workers <= 1) return false;
    if (!o.below) {
      std::cerr << "bimono: --workers needs --below; running on one worker\n";
      return false;
    }
    return true;
  }

  std::vector<LevelInterval<V>> intervals() const {
    V lo = lower();
    V hi = *upper();
    std::size_t parts = o.parts != 0 ? o.parts : o.workers;
    if (o.split == "balanced") return partition_levels_balanced(f, d, lo, hi, parts);
    if (o.split != "uniform") throw RangeError("unknown split '" + o.split + "' (expected uniform or balanced)");
    return partition_levels(lo, hi, parts);
  }

  std::unique_ptr<BimonotoneEnumerator<V>> stream(const Evaluator<V>& fx, const BimonotoneDomain& dx) const {
    EnumeratorOptions<V> opts;
    opts.ceiling = upper();
    if (o.from) {
      V lo = lower();
      if (opts.ceiling && !(lo < *opts.ceiling)) throw RangeError("--from must be below --below");
      return std::make_unique<BimonotoneEnumerator<V>>(enumerate_from(fx, dx, lo, opts, true));
    }
    return std::make_unique<BimonotoneEnumerator<V>>(fx, dx, opts);
  }

  WorkPlan<V> plan(TaskKind kind) const {
    WorkPlan<V> p;
    p.kind = kind;
    p.f = f;
    p.domain = d;
    p.k = o.k;
    p.intervals = intervals();
    if (o.limit) p.max_hits = static_cast<std::size_t>(*o.limit);
    return p;
  }

  void report(const PlanStats& s) const {
    if (!o.stats) return;
    std::cerr << "intervals=" << s.intervals_run << " items=" << s.items << " peak=" << s.peak
              << " bound_violations=" << s.bound_violations << '\n';
  }
  void report(const BimonotoneEnumerator<V>& e) const {
    if (!o.stats) return;
    std::cerr << "emitted=" << e.emitted() << " frontier=" << e.frontier().size() << " peak=" << e.peak()
              << " bound_violations=" << e.bound_violations() << '\n';
  }
};

template <class V>
void print_item(Out& out, const StreamItem<V>& item) {
  out << to_string(item.value) << '\t' << std::to_string(item.a) << '\t' << std::to_string(item.b) << '\n';
}

template <class V>
int cmd_enum(const Options& opts) {
  Context<V> ctx(opts);
  Out out;
  std::uint64_t printed = 0;
  auto room = [&] { return !opts.limit || printed < *opts.limit; };

  if (!opts.checkpoint && !opts.resume && ctx.partitioned()) {
    WorkPlan<V> plan = ctx.plan(TaskKind::Enumerate);
    plan.max_hits.reset();
    PlanStats stats = run_partitioned<V>(plan, opts.workers, [&](IntervalResult<V>& r) {
      for (const auto& item : std::get<std::vector<StreamItem<V>>>(r.output)) {
        if (!room()) break;
        print_item(out, item);
        ++printed;
      }
      return room() && !g_interrupted;
    });
    ctx.report(stats);
    return g_interrupted ? kExitInterrupted : kExitOk;
  }

  std::unique_ptr<BimonotoneEnumerator<V>> e;
  if (opts.resume) {
    EnumeratorOptions<V> eo;
    eo.ceiling = ctx.upper();
    Checkpoint cp = read_checkpoint_file(*opts.resume);
    e = std::make_unique<BimonotoneEnumerator<V>>(checkpoint_resume<V>(cp, ctx.f, ctx.d, ctx.fn.text, eo));
  } else {
    e = ctx.stream(ctx.f, ctx.d);
  }
  while (room() && !g_interrupted) {
    auto item = e->next();
    if (!item) break;
    print_item(out, *item);
    ++printed;
  }
  out.flush();
  if (opts.checkpoint) {
    write_checkpoint_file(*opts.checkpoint, checkpoint_save(*e, ctx.fn.text));
    if (opts.stats) std::cerr << "checkpoint written to " << *opts.checkpoint << '\n';
  }
  ctx.report(*e);
  return g_interrupted ? kExitInterrupted : kExitOk;
}

template <class V>
int cmd_collide(const Options& opts) {
  Context<V> ctx(opts);
  Function gfn = parse_function(opts.g, ctx.d);
  Evaluator<V> g = make_evaluator<V>(gfn);
  Out out;
  std::uint64_t printed = 0;
  auto room = [&] { return !opts.limit || printed < *opts.limit; };
  auto print = [&](const CollisionHit<V>& h) {
    out << to_string(h.value) << '\t' << std::to_string(h.left.first) << '\t' << std::to_string(h.left.second)
        << '\t' << std::to_string(h.right.first) << '\t' << std::to_string(h.right.second) << '\n';
    ++printed;
  };

  if (ctx.partitioned()) {
    WorkPlan<V> plan = ctx.plan(TaskKind::Collide);
    plan.g = g;
    PlanStats stats = run_partitioned<V>(plan, opts.workers, [&](IntervalResult<V>& r) {
      for (const auto& h : std::get<std::vector<CollisionHit<V>>>(r.output)) {
        if (!room()) break;
        print(h);
      }
      return room() && !g_interrupted;
    });
    ctx.report(stats);
    return g_interrupted ? kExitInterrupted : kExitOk;
  }

  CollisionStream<V> hits(ctx.stream(ctx.f, ctx.d), ctx.stream(g, ctx.d));
  while (room() && !g_interrupted) {
    auto h = hits.next();
    if (!h) break;
    print(*h);
  }
  return g_interrupted ? kExitInterrupted : kExitOk;
}

template <class V>
int cmd_multi(Options opts) {
  if (!opts.limit) opts.limit = 1;
  Context<V> ctx(opts);
  Out out;
  std::uint64_t printed = 0;
  auto room = [&] { return printed < *opts.limit; };
  auto print = [&](const KFoldHit<V>& h) {
    std::vector<ParamPair> reps = h.representations;
    std::sort(reps.begin(), reps.end());
    out << to_string(h.value);
    for (const auto& p : reps) out << '\t' << pair_text(p);
    out << '\n';
    ++printed;
  };

  if (ctx.partitioned()) {
    PlanStats stats = run_partitioned<V>(ctx.plan(TaskKind::KFold), opts.workers, [&](IntervalResult<V>& r) {
      for (const auto& h : std::get<std::vector<KFoldHit<V>>>(r.output)) {
        if (!room()) break;
        print(h);
      }
      return room() && !g_interrupted;
    });
    ctx.report(stats);
    return g_interrupted ? kExitInterrupted : kExitOk;
  }

  auto src = ctx.stream(ctx.f, ctx.d);
  BimonotoneEnumerator<V>* e = src.get();
  KFoldStream<V> hits(std::move(src), opts.k);
  while (room() && !g_interrupted) {
    auto h = hits.next();
    if (!h) break;
    print(*h);
  }
  ctx.report(*e);
  return g_interrupted ? kExitInterrupted : kExitOk;
}

template <class V>
int cmd_count(const Options& opts) {
  if (!opts.level) throw RangeError("count needs --level");
  Context<V> ctx(opts);
  LevelCounts c = count_below(ctx.f, ctx.d, parse_value<V>(*opts.level));
  Out out;
  out << "n=" << count_to_string(c.n) << " m=" << std::to_string(c.m) << '\n';
  return kExitOk;
}

template <class V>
int cmd_partition(const Options& opts) {
  if (!opts.below) throw RangeError("partition needs --below");
  Context<V> ctx(opts);
  Options o = opts;
  if (o.parts == 0) o.parts = o.workers;
  ctx.o = o;
  Out out;
  for (const auto& iv : ctx.intervals()) out << to_string(iv.lo) << '\t' << to_string(iv.hi) << '\n';
  return kExitOk;
}

int cmd_delta(const Options& opts) {
  Polynomial p = parse_polynomial(trim(opts.f));
  TropicalResult r = tropical_delta(p);
  Out out;
  out << r.to_string() << '\n';
  return kExitOk;
}

template <class V>
int cmd_bench(const Options& opts) {
  Context<V> ctx(opts);
  BenchAlgorithm alg;
  if (opts.algorithm == "bimonotone") alg = BenchAlgorithm::Bimonotone;
  else if (opts.algorithm == "semimonotone") alg = BenchAlgorithm::Semimonotone;
  else throw RangeError("unknown algorithm '" + opts.algorithm + "' (expected bimonotone or semimonotone)");
  BenchResult<V> r = bench_frontier(ctx.f, ctx.d, alg, opts.n_max, opts.every);
  Out out;
  for (const auto& s : r.samples) {
    out << std::to_string(s.n) << '\t' << std::to_string(s.m) << '\t' << std::to_string(s.m_max) << '\t'
        << to_string(s.value) << '\n';
  }
  char slope[64];
  std::snprintf(slope, sizeof slope, "slope=%.6f\n", r.slope);
  out << std::string(slope);
  if (opts.stats) std::cerr << "bound_violations=" << r.bound_violations << '\n';
  return kExitOk;
}

template <class V>
int dispatch(const std::string& cmd, const Options& o) {
  if (cmd == "enum") return cmd_enum<V>(o);
  if (cmd == "collide") return cmd_collide<V>(o);
  if (cmd == "multi") return cmd_multi<V>(o);
  if (cmd == "count") return cmd_count<V>(o);
  if (cmd == "partition") return cmd_partition<V>(o);
  if (cmd == "bench") return cmd_bench<V>(o);
  return cmd_delta(o);
}

int exit_code_for(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const IntervalTaskError& ex) {
    if (ex.cause()) return exit_code_for(ex.cause());
    std::cerr << "bimono: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const ValueOverflow& ex) {
    std::cerr << "bimono: " << ex.what() << "; rerun with --bigint\n";
    return kExitOverflow;
  } catch (const CountOverflow& ex) {
    std::cerr << "bimono: " << ex.what() << '\n';
    return kExitOverflow;
  } catch (const DomainError& ex) {
    std::cerr << "bimono: invalid domain: " << ex.what() << '\n';
    return kExitDomain;
  } catch (const CheckpointError& ex) {
    std::cerr << "bimono: checkpoint: " << ex.what() << '\n';
    return kExitCheckpoint;
  } catch (const ParseError& ex) {
    std::cerr << "bimono: parse error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "bimono: " << ex.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorted enumeration of bimonotone functions and collision search"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--f", o.f, "Polynomial in a and b, 'max', or 'sum-of-powers <alpha> <beta>'")->required();
    sub->add_option("--domain", o.domain, "all, a<=b or a>=b")->capture_default_str();
    sub->add_option("--min", o.min, "Smallest parameter on both axes")->capture_default_str();
    sub->add_option("--amax", o.amax, "Largest a (default unbounded)");
    sub->add_option("--bmax", o.bmax, "Largest b (default unbounded)");
    sub->add_flag("--bigint", o.bigint, "Arbitrary-precision values");
    sub->add_flag("--stats", o.stats, "Print run statistics to standard error");
  };
  auto ranged = [&o](CLI::App* sub) {
    sub->add_option("--from", o.from, "Lowest value, inclusive (default f at the domain minimum)");
    sub->add_option("--below", o.below, "Value cap, exclusive");
    sub->add_option("--limit", o.limit, "Stop after this many output lines");
    sub->add_option("--workers", o.workers, "Worker threads (needs --below)")->capture_default_str();
    sub->add_option("--parts", o.parts, "Level intervals (default: one per worker)");
    sub->add_option("--split", o.split, "uniform or balanced")->capture_default_str();
  };

  auto* en = app.add_subcommand("enum", "Enumerate values in sorted order");
  common(en);
  ranged(en);
  en->add_option("--checkpoint", o.checkpoint, "Write a checkpoint here on exit or interrupt");
  en->add_option("--resume", o.resume, "Continue from a checkpoint file");

  auto* co = app.add_subcommand("collide", "Find f(a,b) = g(c,d)");
  common(co);
  ranged(co);
  co->add_option("--g", o.g, "Right-hand function")->required();

  auto* mu = app.add_subcommand("multi", "Find values with at least k representations");
  common(mu);
  ranged(mu);
  mu->add_option("-k", o.k, "Required number of representations")->capture_default_str();

  auto* cn = app.add_subcommand("count", "Count points below a level and the minima at it");
  common(cn);
  cn->add_option("--level", o.level, "Level z")->required();

  auto* pa = app.add_subcommand("partition", "Split a level range into intervals");
  common(pa);
  ranged(pa);

  auto* de = app.add_subcommand("delta", "Tropical growth exponent of a polynomial");
  de->add_option("--f", o.f, "Polynomial in a and b")->required();

  auto* be = app.add_subcommand("bench", "Sample frontier size against output count");
  common(be);
  be->add_option("--n", o.n_max, "Number of outputs")->capture_default_str();
  be->add_option("--every", o.every, "Sampling period")->capture_default_str();
  be->add_option("--algorithm", o.algorithm, "bimonotone or semimonotone")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  std::signal(SIGINT, on_sigint);
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return o.bigint ? dispatch<BigValue>(cmd, o) : dispatch<Value128>(cmd, o);
  } catch (...) {
    return exit_code_for(std::current_exception());
  }
}
