#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twoway/run.hpp"
#include "twoway/transducer.hpp"

namespace twoway {

struct FunctionalityCounterexample {
  Word input;
  Run run1, run2;
};

struct FunctionalVerdict {
  int maxlen = 0;
  std::optional<FunctionalityCounterexample> counterexample;
  bool functional() const { return !counterexample; }
};

// Words over the user input symbols of t, by length then lexicographically.
std::vector<Word> all_words(const Transducer& t, int maxlen);

// Set of outputs over all successful runs on u. One-way transducers are
// simulated forward over (state, output) pairs instead of enumerating runs.
std::set<Word> outputs_on(const Transducer& t, const Word& u);

FunctionalVerdict check_functional(const Transducer& t, int maxlen);

// Outputs are rendered as symbol names so transducers with different symbol
// tables compare correctly. A missing output means "not in the domain".
struct EquivCounterexample {
  std::vector<std::string> input;
  std::optional<std::vector<std::string>> out1, out2;
};

std::optional<EquivCounterexample> equiv_bounded(const Transducer& t1, const Transducer& t2, int maxlen);

}  // namespace twoway
