#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twoway/run.hpp"

namespace twoway {

// Relation on flow nodes; row i is a bitset of successors. At most 64 nodes.
using Rel = std::vector<std::uint64_t>;

enum class FactorKind { LL, LR, RL, RR };
std::string_view factor_kind_name(FactorKind k);

// A flow over nodes 0..max(h1,h2)-1. h1/h2 are the heights of the crossing
// sequences at the left and right border. `bottom` is the absorbing element.
//   LL: even < h1 -> odd < h1      LR: even < h1 -> even < h2
//   RL: odd < h2  -> odd < h1      RR: odd < h2  -> even < h2
struct Flow {
  bool bottom = false;
  int h1 = 0, h2 = 0;
  Rel ll, lr, rl, rr;

  int nodes() const { return std::max(h1, h2); }
  static Flow make(int h1, int h2);
  static Flow bot();
  void add(FactorKind k, int from, int to);
  bool has(FactorKind k, int from, int to) const;
  // Union of the four relations.
  Rel edges() const;
  bool operator==(const Flow& o) const;
};

// Degree discipline: every node has at most one incoming and one outgoing
// edge, and edges respect the kind/parity/height constraints.
bool well_formed(const Flow& f);
Flow flow_product(const Flow& f, const Flow& g);
std::string format_flow(const Flow& f);

struct Effect {
  bool bottom = false;
  Flow flow;
  CrossingSequence c1, c2;

  static Effect bot();
  bool operator==(const Effect& o) const;
};

Effect effect_product(const Effect& e, const Effect& g);
std::uint64_t effect_hash(const Effect& e);
std::string format_effect(const Effect& e);

// Maximal run factors whose transitions all read letters x1+1..x2, that is,
// stay inside [x1,x2] without leaving through its borders.
struct InterceptedFactor {
  FactorKind kind;
  int first = 0, last = 0;  // run indices of the endpoints
  int from = 0, to = 0;     // levels of the endpoints (flow edge)
};

std::vector<InterceptedFactor> intercepted_factors(const Run& r, int x1, int x2);
Flow flow_of_interval(const Run& r, int x1, int x2);
Effect effect_of_interval(const Run& r, int x1, int x2);

// Relation helpers, exposed for tests.
Rel rel_compose(const Rel& a, const Rel& b);
Rel rel_union(const Rel& a, const Rel& b);
Rel rel_star(const Rel& a);

}  // namespace twoway
