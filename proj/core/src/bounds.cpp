#include "twoway/bounds.hpp"

#include <fmt/format.h>
#include <stdexcept>

namespace twoway {

std::string_view mode_name(Mode m) { return m == Mode::Sweeping ? "sweeping" : "general"; }

int max_height(int num_states) {
  if (num_states < 1) throw std::invalid_argument("a transducer needs at least one state");
  return 2 * num_states - 1;
}

BigInt emax(int num_states) {
  int h = max_height(num_states);
  BigInt q = num_states;
  return pow(BigInt(4), h) * pow(q, 2 * h) * pow(q, 2 * h);
}

BigInt emax(const Transducer& t) { return emax(t.num_states()); }

std::optional<BigInt> StructuredBound::value(std::uint64_t max_bits) const {
  if (exponent > max_bits) return std::nullopt;
  BigInt v = coeff;
  v <<= static_cast<std::uint64_t>(exponent);
  return v + addend;
}

BigInt StructuredBound::bit_length() const {
  if (auto v = value(4096)) return *v == 0 ? BigInt(0) : BigInt(msb(*v) + 1);
  // addend is tiny next to 2^exponent here, so it cannot carry into coeff
  return BigInt(msb(coeff) + 1) + exponent;
}

std::uint64_t StructuredBound::residue(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  BigInt mod = m;
  BigInt p = powm(BigInt(2), exponent, mod);
  BigInt r = (coeff % mod) * p % mod;
  r = (r + addend % mod) % mod;
  return static_cast<std::uint64_t>(r);
}

std::string StructuredBound::to_string() const {
  if (auto v = value(4096)) return v->str();
  return fmt::format("{}*2^{}+{}", coeff.str(), exponent.str(), addend.str());
}

BigInt sweeping_bound(int num_states, int cmax) {
  return BigInt(cmax) * pow(BigInt(num_states), max_height(num_states)) + 1;
}

StructuredBound general_bound(int num_states, int cmax) {
  int h = max_height(num_states);
  StructuredBound b;
  b.coeff = BigInt(cmax) * h;
  b.exponent = 3 * emax(num_states);
  b.addend = BigInt(4) * cmax * h + BigInt(4) * cmax;
  return b;
}

StructuredBound bound_B(const Transducer& t, Mode mode) {
  if (mode == Mode::General) return general_bound(t.num_states(), t.cmax());
  return {sweeping_bound(t.num_states(), t.cmax()), 0, 0};
}

}  // namespace twoway
