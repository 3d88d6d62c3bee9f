#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "twoway/transducer.hpp"

namespace twoway {

using BigInt = boost::multiprecision::cpp_int;

enum class Mode { Sweeping, General };
std::string_view mode_name(Mode m);

// H = 2|Q| - 1, the maximal height of a normalized crossing sequence.
int max_height(int num_states);

// Size bound of the effect semigroup: 4^H * |Q|^(2H) * |Q|^(2H).
BigInt emax(int num_states);
BigInt emax(const Transducer& t);

// coeff * 2^exponent + addend. The general constant has an exponent far too
// large to expand for |Q| >= 3, so it is kept in this form.
struct StructuredBound {
  BigInt coeff;
  BigInt exponent;
  BigInt addend;

  // Expanded value, if the exponent is at most max_bits.
  std::optional<BigInt> value(std::uint64_t max_bits = std::uint64_t{1} << 21) const;
  // Number of bits of the value.
  BigInt bit_length() const;
  // Value modulo m (m >= 1).
  std::uint64_t residue(std::uint64_t m) const;
  // Decimal when the exponent is small, else "coeff*2^exponent+addend".
  std::string to_string() const;
};

// cmax * |Q|^H + 1
BigInt sweeping_bound(int num_states, int cmax);
// cmax * H * 2^(3 emax) + 4 cmax H + 4 cmax
StructuredBound general_bound(int num_states, int cmax);
StructuredBound bound_B(const Transducer& t, Mode mode);

}  // namespace twoway
