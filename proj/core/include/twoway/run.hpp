#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twoway/transducer.hpp"

namespace twoway {

struct Location {
  int pos = 0;
  int level = 0;
  auto operator<=>(const Location&) const = default;
};

using CrossingSequence = std::vector<StateId>;

// A run, or a contiguous fragment of one. Location i carries states[i]; step i
// applies trans[i] (emitting outs[i]) from locs[i] to locs[i+1].
// `input` is the full input ^u$, so the maximal position omega is input.size().
struct Run {
  Word input;
  std::vector<Location> locs;
  std::vector<StateId> states;
  std::vector<int> trans;
  std::vector<Word> outs;
  bool accepts = false;
  int origin = 0;  // index of locs[0] in the run this fragment was cut from

  int omega() const { return static_cast<int>(input.size()); }
  int steps() const { return static_cast<int>(trans.size()); }
  int size() const { return static_cast<int>(locs.size()); }
  bool operator==(const Run&) const = default;
};

// Letter index (1-based into ^u$) read by a transition leaving `l`.
inline int letter_read(const Location& l) { return l.level % 2 == 0 ? l.pos + 1 : l.pos; }

// Per-position lookup of run indices; at(x)[y] is the index of (x,y).
class RunIndex {
 public:
  explicit RunIndex(const Run& r);
  int index_of(const Location& l) const;  // -1 if absent
  const std::vector<int>& at(int pos) const { return by_pos_.at(pos); }
  int height(int pos) const { return static_cast<int>(by_pos_.at(pos).size()); }

 private:
  std::vector<std::vector<int>> by_pos_;
};

struct RunSet {
  std::vector<Run> runs;
  bool cap_exceeded = false;  // some branch was pruned at the height cap
};

// All successful normalized runs on ^u$ (u without endmarkers), in
// lexicographic order of transition ids. heightCap <= 0 means 2|Q|-1.
RunSet enumerate_runs(const Transducer& t, const Word& u, int heightCap = 0);

Word full_input(const Word& u);

Word output_of(const Run& r);
CrossingSequence crossing_sequence(const Run& r, int x);

// Fragment from l1 to l2 (l1 before l2 in run order). Throws std::out_of_range.
Run factor(const Run& r, const Location& l1, const Location& l2);
Run factor_by_index(const Run& r, int i, int j);
// Concatenation of fragments sharing the junction location.
Run concat(const Run& a, const Run& b);

struct LocationSetOutput {
  std::set<Location> locations;
  Word output;
};

LocationSetOutput subsequence_output(const Run& r, const std::set<Location>& z);
// Output of the steps i with keep(i) and keep(i+1), in run order.
Word induced_output(const Run& r, const std::function<bool(int)>& keep);

// Removes factors between repeated (position, state, level parity) triples
// until none remain; levels are recomputed.
Run normalize(const Run& r);
bool is_normalized(const Run& r);

// Checks the step shapes, letters read, and (if accepts) the endpoints.
// Returns an empty string when the run is well formed, else a reason.
std::string check_run(const Transducer& t, const Run& r);

}  // namespace twoway
