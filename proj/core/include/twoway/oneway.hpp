#pragma once

#include <stdexcept>

#include "twoway/transducer.hpp"

namespace twoway {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OnewayOptions {
  long bound = 3;             // b: period and slack bound of blocks and diagonals
  long state_budget = 400000;  // maximal number of explored states, about 1 KB each
  int word_cap = 0;           // cap on buffered output per kind; 0 means bound
};

// Builds a one-way transducer T' that guesses a successful run of t together
// with a decomposition into diagonals and blocks, and emits the output of the
// run in input order:
//  - diagonals: a cut location per position splits the run into an emitted
//    prefix and a pending suffix; outputs of pending factors to the left are
//    buffered, outputs of emitted factors to the right are guessed and
//    checked when the input reaches them;
//  - blocks: the output is w1 v^k v' w3 with |w1|,|v|,|w3| <= b; every output
//    symbol is checked against its index (kept modulo |v|), and emission
//    follows the count of symbols seen so far.
// T' only produces outputs of t (T' is contained in t). Throws ResourceError
// when more than state_budget states are needed.
Transducer construct_oneway(const Transducer& t, const OnewayOptions& opt);
inline Transducer construct_oneway(const Transducer& t, long bound) {
  OnewayOptions o;
  o.bound = bound;
  return construct_oneway(t, o);
}

}  // namespace twoway
