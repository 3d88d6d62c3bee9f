#pragma once

#include <optional>
#include <vector>

#include "twoway/bounds.hpp"
#include "twoway/loops.hpp"
#include "twoway/run.hpp"

namespace twoway {

// An anchor point inside a loop together with its trace.
struct Anchor {
  Loop loop;
  Component component;
  Location location;
  int index = 0;  // run index of location
  std::vector<TracePiece> pieces;
  Word trace_output;
};

// Anchors with non-empty trace output. General: one per component of each
// idempotent loop. Sweeping: the first location of every single-level
// intercepted factor of each loop, kept only if the factor is output-minimal.
std::vector<Anchor> producing_anchors(const Run& r, Mode mode);

// Factor r[i..j] (run indices) on one level: every loop strictly inside its
// position span produces nothing on that level.
bool is_output_minimal_factor(const Run& r, int i, int j);
// No smaller idempotent pair (L',C') with an (L',C')-factor inside an
// (L,C)-factor has a producing trace.
bool is_output_minimal_pair(const Run& r, const Loop& l, const Component& c);

struct Inversion {
  Mode mode = Mode::General;
  Anchor first, second;  // first.index < second.index, first pos > second pos
};

std::vector<Inversion> enumerate_inversions(const Run& r, Mode mode);

// Word spanned by an inversion: out(tr l1) out(r[l1,l2]) out(tr l2).
Word inversion_word(const Run& r, const Inversion& inv);

struct P2Violation {
  Inversion inversion;
  Word word;
  int period = 0;
  int gcd = 0;
  bool divisibility = false;  // period does not divide gcd; independent of b
  bool too_long = false;      // period > b
};

// First inversion violating the periodicity property with bound b. With
// b <= 0 only divisibility is checked.
std::optional<P2Violation> check_p2(const Run& r, long b, Mode mode);
// Recomputes the facts of a violation from the run alone.
bool verify_violation(const Run& r, const P2Violation& v, long b);
// Inversion conditions re-derived from the definitions.
bool verify_inversion(const Run& r, const Inversion& inv);

struct SimClass {
  int first = 0, last = 0;  // run-index interval of the class
  std::vector<int> anchors;  // run indices of inversion anchors inside it
  int min_x = 0, max_x = 0;
  int block_first = 0, block_last = 0;  // extended block
};

// Non-singleton classes in run order.
std::vector<SimClass> sim_classes(const Run& r, const std::vector<Inversion>& inversions);
std::vector<SimClass> sim_classes(const Run& r, Mode mode);

}  // namespace twoway
