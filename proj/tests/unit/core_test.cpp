#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "twoway/checks.hpp"
#include "twoway/run.hpp"
#include "twoway/transducer.hpp"
#include "twoway_tools/corpus.hpp"

using namespace twoway;
using namespace twoway::testing;

namespace {

const char* kCopy = R"(states: p f
input: a b
output: a b
init: p
final: f
p ^ -> p R | -
p a -> p R | a
p b -> p R | b
p $ -> f R | -
)";

std::vector<std::vector<int>> trans_of(const RunSet& rs) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rs.runs) v.push_back(r.trans);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("print and parse round-trip on random transducers", "[core]") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    RandomSpec spec;
    spec.states = uniform(rng, 2, 5);
    spec.letters = uniform(rng, 1, 3);
    spec.kind = i % 3 == 0 ? Kind::Sweeping : (i % 3 == 1 ? Kind::TwoWay : Kind::OneWay);
    spec.deterministic = i % 2 == 0;
    Transducer t = random_transducer(rng, spec);
    Transducer back = parse_transducer(print_transducer(t));
    REQUIRE(back == t);
    REQUIRE(print_transducer(back) == print_transducer(t));
  }
}

TEST_CASE("parse errors carry line numbers", "[core]") {
  std::string text = std::string(kCopy) + "p a q R | a\n";
  try {
    parse_transducer(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 10);
  }
  CHECK_THROWS_AS(parse_transducer("states: p\ninput: a\nbogus: x\n"), ParseError);
  CHECK_THROWS_AS(parse_transducer("states: p\ninput: ^\n"), ParseError);
  CHECK_THROWS_AS(parse_transducer("states: p\ninit: p\nfinal: p\np z -> p R | -\n"), ParseError);
}

TEST_CASE("validation rejects malformed transducers", "[core]") {
  CHECK_THROWS_AS(parse_transducer("states: p\ninit: p\nfinal: p\np ^ -> p L | -\n"), ValidationError);
  CHECK_THROWS_AS(parse_transducer("kind: oneway\nstates: p\ninput: a\ninit: p\nfinal: p\np a -> p L | -\n"),
                  ValidationError);
  // reversal in the middle of the word
  CHECK_THROWS_AS(parse_transducer("kind: sweeping\nstates: p q\ninput: a\ninit: p\nfinal: q\n"
                                   "p ^ -> p R | -\np a -> q L | -\n"),
                  ValidationError);
  CHECK_NOTHROW(parse_transducer("kind: sweeping\nstates: p q\ninput: a\ninit: p\nfinal: q\n"
                                 "p ^ -> p R | -\np $ -> q L | -\n"));
}

TEST_CASE("copy transducer runs once and outputs its input", "[core]") {
  Transducer t = parse_transducer(kCopy);
  for (const Word& u : all_words(t, 5)) {
    RunSet rs = enumerate_runs(t, u);
    REQUIRE(rs.runs.size() == 1);
    const Run& r = rs.runs[0];
    CHECK(check_run(t, r).empty());
    CHECK(is_normalized(r));
    Word expect;
    for (Symbol s : u) expect.push_back(s - 2);
    CHECK(output_of(r) == expect);
    for (int x = 0; x <= r.omega(); ++x) CHECK(crossing_sequence(r, x).size() == 1);
  }
}

TEST_CASE("enumerate_runs agrees with a configuration-graph search", "[core]") {
  Rng rng(23);
  int compared = 0, nonempty = 0;
  for (int i = 0; i < 60; ++i) {
    RandomSpec spec;
    spec.states = 3;
    spec.kind = i % 2 == 0 ? Kind::Sweeping : Kind::TwoWay;
    spec.deterministic = i % 4 < 2;
    Transducer t = random_transducer(rng, spec);
    const int cap = 2 * t.num_states() - 1;
    for (const Word& u : all_words(t, 4)) {
      auto got = trans_of(enumerate_runs(t, u));
      auto want = oracle_runs(t, u, cap);
      REQUIRE(got == want);
      ++compared;
      nonempty += !got.empty();
    }
  }
  CHECK(compared > 1000);
  CHECK(nonempty > 50);
}

TEST_CASE("the golden 9-location run", "[core]") {
  Transducer t = parse_transducer(fig1_text());
  RunSet rs = enumerate_runs(t, parse_input(t, "a2 a3"));
  REQUIRE(rs.runs.size() == 1);
  const Run& r = rs.runs[0];
  CHECK(r.locs == fig1_locations());
  CHECK(crossing_sequence(r, 1) == CrossingSequence{1, 4, 5});
  CHECK(crossing_sequence(r, 2) == CrossingSequence{2, 3, 6});
  CHECK(crossing_sequence(r, 3) == CrossingSequence{7});
}

TEST_CASE("factor, concat and location-set output", "[core]") {
  Transducer t = parse_transducer(fig1_text());
  Run r = enumerate_runs(t, parse_input(t, "a2 a3")).runs.at(0);
  for (int i = 0; i < r.size(); ++i)
    for (int j = i; j < r.size(); ++j)
      for (int k = j; k < r.size(); ++k) {
        Run a = factor_by_index(r, i, j), b = factor_by_index(r, j, k);
        CHECK(concat(a, b) == factor_by_index(r, i, k));
      }
  CHECK(factor(r, {1, 0}, {1, 2}) == factor_by_index(r, 1, 5));
  CHECK_THROWS_AS(factor(r, {1, 2}, {1, 0}), std::out_of_range);

  Transducer p = path_transducer({"a"}, {2, 2}, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {2, 2}, {3, 0}, {4, 0}});
  Run pr = enumerate_runs(p, {2, 2}).runs.at(0);
  // only steps 2 and 5 have both endpoints inside
  std::set<Location> z = {{2, 0}, {2, 1}, {1, 2}, {2, 2}};
  CHECK(subsequence_output(pr, z).output == Word{2, 5});
  CHECK(subsequence_output(pr, {}).output.empty());
}

TEST_CASE("normalize removes repeated configurations", "[core]") {
  // a detour to ^ and back revisits (1, p) on an even level
  Transducer t = parse_transducer(R"(states: p q f
input: a
output: x
init: p
final: f
p ^ -> p R | -
p a -> q L | x
q ^ -> p R | -
p a -> p R | -
p $ -> f R | -
)");
  RunSet rs = enumerate_runs(t, {2});
  REQUIRE(rs.runs.size() == 1);
  CHECK(rs.runs[0].trans == std::vector<int>{0, 3, 4});
  Run r;
  r.input = full_input({2});
  r.locs = {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {3, 0}};
  r.states = {0, 0, 1, 0, 0, 2};
  r.trans = {0, 1, 2, 3, 4};
  r.outs = {{}, {0}, {}, {}, {}};
  r.accepts = true;
  CHECK(check_run(t, r).empty());
  CHECK_FALSE(is_normalized(r));
  Run n = normalize(r);
  CHECK(is_normalized(n));
  CHECK(n.trans == rs.runs[0].trans);
  CHECK(n.locs == rs.runs[0].locs);
  CHECK(output_of(n).empty());
}

TEST_CASE("functionality and bounded equivalence", "[core]") {
  Transducer copy = parse_transducer(kCopy);
  CHECK(check_functional(copy, 5).functional());

  Transducer amb = parse_transducer(R"(states: p f
input: a
output: a b
init: p
final: f
p ^ -> p R | -
p a -> p R | a
p a -> p R | b
p $ -> f R | -
)");
  auto fv = check_functional(amb, 3);
  REQUIRE_FALSE(fv.functional());
  CHECK(fv.counterexample->input.size() == 1);
  CHECK(output_of(fv.counterexample->run1) != output_of(fv.counterexample->run2));

  CHECK_FALSE(equiv_bounded(copy, copy, 5));
  Transducer d1 = corpus::generate("double((a+b)*)");
  Transducer d2 = corpus::generate("double((a+b)*)");
  CHECK_FALSE(equiv_bounded(d1, d2, 5));
  Transducer d3 = corpus::generate("double((abc)*)");
  auto ce = equiv_bounded(d1, d3, 4);
  REQUIRE(ce);
  CHECK(ce->out1 != ce->out2);
}
