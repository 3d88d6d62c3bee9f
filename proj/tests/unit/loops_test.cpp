#include <catch_amalgamated.hpp>

#include <algorithm>

#include "support.hpp"
#include "twoway/flow.hpp"
#include "twoway/loops.hpp"
#include "twoway/run.hpp"

using namespace twoway;
using namespace twoway::testing;

namespace {

std::vector<Sample> mixed_runs(std::uint64_t seed, int count) {
  Rng rng(seed);
  RandomSpec spec;
  spec.states = 3;
  auto v = random_runs(rng, count / 2, spec, 1, 6);
  auto w = random_walk_runs(rng, count - count / 2, 3, 7, 3);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

}  // namespace

TEST_CASE("intercepted factors match a step scan", "[loops]") {
  int intervals = 0;
  for (const auto& s : mixed_runs(41, 120)) {
    const Run& r = s.run;
    for (int x1 = 0; x1 <= r.omega(); ++x1)
      for (int x2 = x1; x2 <= r.omega(); ++x2) {
        auto got = intercepted_factors(r, x1, x2);
        auto want = oracle_factors(r, x1, x2);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
          CHECK(got[i].first == want[i].first);
          CHECK(got[i].last == want[i].last);
          CHECK(got[i].from == want[i].from);
          CHECK(got[i].to == want[i].to);
          const FactorKind k = want[i].from_left ? (want[i].to_left ? FactorKind::LL : FactorKind::LR)
                                                 : (want[i].to_left ? FactorKind::RL : FactorKind::RR);
          CHECK(got[i].kind == k);
        }
        REQUIRE(flow_of_interval(r, x1, x2) == oracle_flow(r, x1, x2));
        ++intervals;
      }
  }
  CHECK(intervals > 1000);
}

TEST_CASE("effects compose along adjacent intervals", "[loops]") {
  for (const auto& s : mixed_runs(43, 60)) {
    const Run& r = s.run;
    // empty intervals intercept nothing and are not identities
    for (int x1 = 0; x1 <= r.omega(); ++x1)
      for (int x2 = x1 + 1; x2 <= r.omega(); ++x2)
        for (int x3 = x2 + 1; x3 <= r.omega(); ++x3)
          REQUIRE(effect_product(effect_of_interval(r, x1, x2), effect_of_interval(r, x2, x3)) ==
                  effect_of_interval(r, x1, x3));
  }
}

TEST_CASE("one-way runs have a single LR edge", "[loops]") {
  Rng rng(47);
  RandomSpec spec;
  spec.kind = Kind::OneWay;
  for (const auto& s : random_runs(rng, 40, spec, 1, 6)) {
    const Run& r = s.run;
    for (int x1 = 0; x1 <= r.omega(); ++x1)
      for (int x2 = x1 + 1; x2 <= r.omega(); ++x2) {
        Flow f = flow_of_interval(r, x1, x2);
        CHECK(f.h1 == 1);
        CHECK(f.h2 == 1);
        CHECK(f.has(FactorKind::LR, 0, 0));
        CHECK(f.edges().size() == 1);
      }
    for (const Loop& l : enumerate_loops(r)) {
      CHECK(is_idempotent(l.effect));
      auto cs = components(l.effect.flow);
      REQUIRE(cs.size() == 1);
      CHECK(cs[0].cycle == std::vector<int>{0});
      CHECK(cs[0].orientation == Orientation::LeftToRight);
    }
  }
}

TEST_CASE("loops are exactly the intervals with equal crossing sequences", "[loops]") {
  for (const auto& s : mixed_runs(53, 80)) {
    const Run& r = s.run;
    std::vector<std::pair<int, int>> want;
    for (int x1 = 1; x1 < r.omega(); ++x1)
      for (int x2 = x1 + 1; x2 < r.omega(); ++x2)
        if (crossing_sequence(r, x1) == crossing_sequence(r, x2)) want.emplace_back(x1, x2);
    std::vector<std::pair<int, int>> got;
    for (const Loop& l : enumerate_loops(r)) got.emplace_back(l.x1, l.x2);
    std::sort(got.begin(), got.end());
    REQUIRE(got == want);
  }
}

TEST_CASE("loops never contain an endmarker", "[loops]") {
  Transducer t = parse_transducer(fig1_text());
  Run r = enumerate_runs(t, parse_input(t, "a2 a3")).runs.at(0);
  CHECK_THROWS_AS(make_loop(r, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_loop(r, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_loop(r, 2, 2), std::invalid_argument);
  // crossing sequences at 1 and 2 differ
  CHECK_THROWS_AS(make_loop(r, 1, 2), std::invalid_argument);
  CHECK(enumerate_loops(r).empty());
}

TEST_CASE("the five-factor interval forms one cycle", "[loops]") {
  Fig3 c = fig3_case();
  Run r = enumerate_runs(c.t, c.u).runs.at(0);
  auto fs = intercepted_factors(r, c.x1, c.x2);
  std::vector<FactorKind> kinds;
  for (const auto& f : fs) kinds.push_back(f.kind);
  CHECK(kinds == std::vector<FactorKind>{FactorKind::LL, FactorKind::LR, FactorKind::RL, FactorKind::LR,
                                         FactorKind::RR});
  auto cs = components(flow_of_interval(r, c.x1, c.x2));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].cycle == std::vector<int>{0, 1, 3, 4, 2});
}

TEST_CASE("traces are undefined on non-idempotent loops", "[loops]") {
  Sample s = fig3_loop_case();
  Loop l = make_loop(s.run, 2, 4);
  CHECK_FALSE(is_idempotent(l.effect));
  auto cs = components(l.effect.flow);
  REQUIRE_FALSE(cs.empty());
  CHECK_THROWS_WITH(anchored_trace(s.run, l, cs[0]), "trace undefined");
  CHECK_THROWS_AS(anchored_traces(s.run, l), std::invalid_argument);
  // pumping only needs a loop
  PumpResult p = pump(s.run, l, 2);
  CHECK(check_run(s.t, p.run).empty());
  CHECK(p.word.size() == s.u.size() + 2);
}

TEST_CASE("pumping once is the identity and more copies stay valid", "[loops]") {
  int pumped = 0;
  for (const auto& s : mixed_runs(59, 80)) {
    for (const Loop& l : enumerate_loops(s.run)) {
      PumpResult one = pump(s.run, l, 1);
      CHECK(one.word == s.u);
      CHECK(one.run.trans == s.run.trans);
      CHECK_THROWS_AS(pump(s.run, l, 0), std::invalid_argument);
      if (!is_idempotent(l.effect)) continue;
      for (int n = 2; n <= 3; ++n) {
        PumpResult p = pump(s.run, l, n);
        REQUIRE(check_run(s.t, p.run).empty());
        CHECK(p.word.size() == s.u.size() + static_cast<size_t>((n - 1) * (l.x2 - l.x1)));
        CHECK(p.run.trans == oracle_pump_trans(s.run, l.x1, l.x2, n));
        // the output grows by the trace outputs
        size_t extra = 0;
        for (const auto& tr : anchored_traces(s.run, l)) extra += tr.output(s.run).size();
        CHECK(output_of(p.run).size() == output_of(s.run).size() + (n - 1) * extra);
      }
      ++pumped;
    }
  }
  CHECK(pumped > 20);
}
