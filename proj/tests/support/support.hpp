#pragma once

// Shared helpers for the unit tests and the acceptance suite: random
// transducers and runs, golden cases, and oracles that recompute facts
// without going through the library code under test.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "twoway/flow.hpp"
#include "twoway/run.hpp"
#include "twoway/transducer.hpp"

namespace twoway::testing {

using Rng = std::mt19937_64;

struct RandomSpec {
  int states = 3;
  int letters = 2;
  int outputs = 2;
  Kind kind = Kind::TwoWay;
  double density = 0.85;  // chance that a (state, letter) pair has a transition
  int max_out = 2;        // longest output word per transition
  bool deterministic = true;
};

Transducer random_transducer(Rng& rng, const RandomSpec& spec);
Word random_word(Rng& rng, const Transducer& t, int len);
int uniform(Rng& rng, int lo, int hi);  // inclusive

struct Sample {
  Transducer t;
  Word u;
  Run run;
};

// Draws transducers and words until `count` accepted runs satisfy keep.
std::vector<Sample> random_runs(Rng& rng, int count, const RandomSpec& spec, int minlen, int maxlen,
                                const std::function<bool(const Run&)>& keep = {});

// A random walk over locations labelled with `states` states so that the
// walk is a normalized run; the transducer has exactly the transitions the
// walk uses. Shared labels across positions make non-trivial loops likely.
std::optional<Sample> random_walk_run(Rng& rng, int len, int states, int letters, int max_out);
std::vector<Sample> random_walk_runs(Rng& rng, int count, int minlen, int maxlen, int states,
                                     const std::function<bool(const Run&)>& keep = {});

// Transition-id sequences of all accepting paths of the configuration graph
// (head over ^u$), filtered to normalized paths of height <= cap.
std::vector<std::vector<int>> oracle_runs(const Transducer& t, const Word& u, int cap);

// A transducer with one fresh state per location of `path`, whose only run
// on u visits exactly these locations. Each step emits one output symbol
// named after the step number.
Transducer path_transducer(const std::vector<std::string>& letters, const Word& u,
                           const std::vector<Location>& path);

// Golden case: automaton q0..q8 whose run on a1 a2 a3 a4 (a1 = ^, a4 = $)
// climbs to level 2 at positions 1 and 2.
std::string fig1_text();
std::vector<Location> fig1_locations();

// Golden case: a run whose interval [x1,x2] intercepts five factors
// LL, LR, RL, LR, RR forming one cycle on five levels.
struct Fig3 {
  Transducer t;
  Word u;
  int x1 = 0, x2 = 0;
};
Fig3 fig3_case();
// The same run with the states at position x2 renamed to those at x1, so
// [x1,x2] is a loop; its effect is not idempotent. Deterministic.
Sample fig3_loop_case();

// Intercepted factors recomputed by scanning steps.
struct OFactor {
  int first = 0, last = 0;  // run indices
  bool from_left = true, to_left = true;
  int from = 0, to = 0;  // levels
};
std::vector<OFactor> oracle_factors(const Run& r, int x1, int x2);

// Components as node lists, following the factor starting at each node.
std::vector<std::vector<int>> oracle_cycles(const Run& r, int x1, int x2);

// Transition ids of pump(r,[x1,x2],n) per the idempotent pumping law:
// rho0 tr1^(n-1) rho1 ... trk^(n-1) rhok, anchors sorted in run order.
std::vector<int> oracle_pump_trans(const Run& r, int x1, int x2, int n);

int naive_period(const Word& w);

// Effect of an interval recomputed from oracle_factors.
Flow oracle_flow(const Run& r, int x1, int x2);

// The bounds recomputed with GMP.
mpz_class gmp_emax(int q);
mpz_class gmp_sweeping(int q, int cmax);
struct GmpGeneral {
  mpz_class coeff, exponent, addend;
};
GmpGeneral gmp_general(int q, int cmax);
// coeff * 2^exponent + addend mod m.
std::uint64_t gmp_residue(const GmpGeneral& g, std::uint64_t m);

}  // namespace twoway::testing
