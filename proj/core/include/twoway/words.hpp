#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twoway/transducer.hpp"

namespace twoway {

// Smallest p >= 1 with w[i] = w[i+p] for all valid i; 0 for the empty word.
int minimal_period(const Word& w);
// Vacuously true when p >= |w|. Requires p >= 1.
bool has_period(const Word& w, int p);

struct FineWilfResult {
  std::optional<Word> combined;
  std::string reason;  // set when combined is empty
};

// w1's suffix of length m equals w2's prefix of length m. When
// m >= p1 + p2 - gcd(p1,p2), returns w1 followed by w2[m:]. Throws
// std::invalid_argument naming the word whose precondition fails.
FineWilfResult fine_wilf(const Word& w1, const Word& w2, int m, int p1, int p2);

using AlmostPeriodic = std::tuple<Word, Word, Word>;

// First (w0, w1, w2) with |w0| <= p, |w2| <= p and minimal_period(w1) <= p,
// scanning |w0| ascending, then |w2| ascending.
std::optional<AlmostPeriodic> almost_periodic_decompose(const Word& w, int p);

enum class Slot { N1, N2 };

// v[0] v[1]^e1 v[2]^e2 ... v[k]^ek v[k+1], with k = slots.size().
struct IteratedFactorWord {
  std::vector<Word> constants;
  std::vector<Slot> slots;
};

Word instantiate(const IteratedFactorWord& s, int n1, int n2);
// One exponent per iterated factor.
Word instantiate(const IteratedFactorWord& s, const std::vector<int>& exponents);

// Checks every sample exponent vector yields a p-periodic word, given that
// all exponents equal to nBig (> p) do. Throws std::invalid_argument if not.
bool check_periods_lemma(const IteratedFactorWord& s, int p, int nBig,
                         const std::vector<std::vector<int>>& samples);

}  // namespace twoway
