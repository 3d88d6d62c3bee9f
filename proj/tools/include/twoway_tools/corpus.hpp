#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twoway/transducer.hpp"

namespace twoway::corpus {

// Transducers of the example corpus, built from a short spec:
//   double((w)*)        u in w^* mapped to u u (sweeping)
//   double((a+b+...)*)  any word over the letters mapped to u u (sweeping)
//   double(w1+w2+...)   a finite set of words mapped to u u (sweeping)
//   running             u1#...#un to w1#...#wn, where wi = ui ui iff ui is in
//                       (abc)^* and |u(i+1)| is even (two-way)
//   fn(n), 1 <= n <= 3  a0 w0 ... a(2^n-1) w(2^n-1) with wi the n-bit binary
//                       code of i, mapped to u u (deterministic sweeping)
// Throws std::invalid_argument on an unsupported spec.
Transducer generate(std::string_view spec);

std::vector<std::string> known_specs();

Transducer double_star_word(const std::string& w);
Transducer double_star_letters(const std::vector<char>& letters);
Transducer double_finite(const std::vector<std::string>& words);
Transducer running();
Transducer fn(int n);

// The input word of fn(n), with the given letters a_i (size 2^n).
std::string fn_input(int n, const std::string& letters);

}  // namespace twoway::corpus
