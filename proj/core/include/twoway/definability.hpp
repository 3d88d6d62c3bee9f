#pragma once

#include <string>
#include <variant>

#include "twoway/bounds.hpp"
#include "twoway/inversions.hpp"
#include "twoway/oneway.hpp"
#include "twoway/run.hpp"

namespace twoway {

// A run on `input` whose inversion fails the divisibility condition. This is a
// proof that t is not one-way definable, independent of any bound.
struct NotDefinable {
  Word input;
  Run run;
  P2Violation violation;
};

// No evidence against definability up to maxlen: every run decomposes with
// bound b and the constructed one-way T' agrees with t on all inputs up to
// maxlen. This is NOT a proof of definability.
struct ConsistentUpTo {
  int maxlen = 0;
  long bound = 0;
  int oneway_states = 0;
  int oneway_transitions = 0;
};

struct Inconclusive {
  std::string stage;  // functionality, decomposition, construction, equivalence
  std::string reason;
};

using Verdict = std::variant<NotDefinable, ConsistentUpTo, Inconclusive>;

struct DefinabilityOptions {
  long bound = 3;
  int maxlen = 6;
  Mode mode = Mode::General;
  long state_budget = 400000;
};

Verdict check_definable(const Transducer& t, const DefinabilityOptions& opt);
inline Verdict check_definable(const Transducer& t, long b, int maxlen, Mode mode = Mode::General) {
  return check_definable(t, DefinabilityOptions{b, maxlen, mode, 400000});
}

// Re-checks a certificate from t alone: the run is a successful run of t on
// the input and the violation holds (divisibility failure).
bool verify_not_definable(const Transducer& t, const NotDefinable& w);

std::string verdict_name(const Verdict& v);

}  // namespace twoway
