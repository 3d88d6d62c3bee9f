#pragma once

#include <vector>

#include "twoway/flow.hpp"
#include "twoway/run.hpp"

namespace twoway {

// An interval [x1,x2] whose border crossing sequences coincide.
struct Loop {
  int x1 = 0, x2 = 0;
  Effect effect;
};

// All loops of r, ordered by x1 then x2.
std::vector<Loop> enumerate_loops(const Run& r);
// Throws std::invalid_argument if [x1,x2] is not a loop of r.
Loop make_loop(const Run& r, int x1, int x2);
bool is_idempotent(const Effect& e);
bool is_idempotent(const Run& r, const Loop& l);

enum class Orientation { LeftToRight, RightToLeft };

struct Component {
  std::vector<int> cycle;  // starts at the minimum node
  Orientation orientation = Orientation::LeftToRight;

  int min() const;
  int max() const;
};

// Cycles of the flow graph. Nodes on open paths belong to no component.
std::vector<Component> components(const Flow& f);

struct TracePiece {
  FactorKind kind;
  int first = 0, last = 0;  // run indices of the intercepted factor
};

struct AnchoredTrace {
  Loop loop;
  Component component;
  Location anchor;
  int anchor_index = 0;  // run index of the anchor
  std::vector<TracePiece> pieces;

  Word output(const Run& r) const;
  std::vector<int> transitions(const Run& r) const;
  // The pieces glued into one fragment; positions are shifted by multiples
  // of the loop width so consecutive pieces connect, levels are kept.
  Run materialize(const Run& r) const;
};

// Throws std::invalid_argument("trace undefined") unless the loop is idempotent.
AnchoredTrace anchored_trace(const Run& r, const Loop& l, const Component& c);
// One per component, sorted by anchor run index.
std::vector<AnchoredTrace> anchored_traces(const Run& r, const Loop& l);

struct PumpResult {
  Word word;  // pumped input, without endmarkers
  Run run;
};

// n counts total copies of the loop, so n = 1 returns the run unchanged.
PumpResult pump(const Run& r, const Loop& l, int n);

}  // namespace twoway
