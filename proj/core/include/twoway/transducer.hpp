#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twoway {

using Symbol = int;
using StateId = int;
using Word = std::vector<Symbol>;

// Input symbol indices reserved for the endmarkers.
inline constexpr Symbol kLeftEnd = 0;
inline constexpr Symbol kRightEnd = 1;

enum class Dir { Left, Right };
enum class Kind { TwoWay, Sweeping, OneWay };

struct Transition {
  StateId src = 0;
  Symbol read = 0;
  Word out;
  StateId dst = 0;
  Dir dir = Dir::Right;

  bool operator==(const Transition&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A two-way transducer over named states and symbols. Input symbol 0 is `^`
// and 1 is `$`; user symbols follow. Call finalize() after any edit.
struct Transducer {
  Kind kind = Kind::TwoWay;
  std::vector<std::string> states;
  std::vector<std::string> input;
  std::vector<std::string> output;
  std::vector<Transition> transitions;
  std::vector<StateId> initial;
  std::vector<StateId> final_states;

  // Validates and rebuilds the (state, symbol) index. Throws ValidationError.
  void finalize();

  int num_states() const { return static_cast<int>(states.size()); }
  int num_input() const { return static_cast<int>(input.size()); }
  bool is_initial(StateId q) const;
  bool is_final(StateId q) const;
  int cmax() const;
  // Transition ids leaving q on a, in increasing id order.
  const std::vector<int>& outgoing(StateId q, Symbol a) const;

  int state_index(std::string_view name) const;
  int input_index(std::string_view name) const;
  int output_index(std::string_view name) const;

  bool operator==(const Transducer& o) const;

 private:
  std::vector<std::vector<int>> index_;
  std::vector<char> is_init_, is_fin_;
};

Transducer parse_transducer(std::string_view text);
std::string print_transducer(const Transducer& t);
void validate(const Transducer& t);

std::string_view kind_name(Kind k);

// Tokenizes a word: whitespace-separated tokens; a token that is not a symbol
// is split into characters when every symbol is a single character.
// Returns symbol indices into `alphabet`; throws std::invalid_argument.
Word parse_word(const std::vector<std::string>& alphabet, std::string_view text);
std::string format_word(const std::vector<std::string>& alphabet, const Word& w);

// Input words exclude endmarkers, so symbols are >= 2.
inline Word parse_input(const Transducer& t, std::string_view text) {
  Word w = parse_word(t.input, text);
  for (Symbol s : w)
    if (s < 2) throw std::invalid_argument("endmarker inside input word");
  return w;
}
inline Word parse_output(const Transducer& t, std::string_view text) {
  return parse_word(t.output, text);
}

}  // namespace twoway
