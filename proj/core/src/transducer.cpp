#include "twoway/transducer.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <set>
#include <sstream>

namespace twoway {

ParseError::ParseError(int line, const std::string& msg)
    : std::runtime_error(fmt::format("line {}: {}", line, msg)), line_(line) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int find_name(const std::vector<std::string>& names, std::string_view n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

bool all_single_char(const std::vector<std::string>& alphabet, size_t from) {
  for (size_t i = from; i < alphabet.size(); ++i)
    if (alphabet[i].size() != 1) return false;
  return true;
}

}  // namespace

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::TwoWay: return "twoway";
    case Kind::Sweeping: return "sweeping";
    case Kind::OneWay: return "oneway";
  }
  return "twoway";
}

Word parse_word(const std::vector<std::string>& alphabet, std::string_view text) {
  Word w;
  bool splittable = all_single_char(alphabet, 0);
  for (const auto& tok : split_ws(text)) {
    int s = find_name(alphabet, tok);
    if (s >= 0) {
      w.push_back(s);
      continue;
    }
    if (!splittable) throw std::invalid_argument(fmt::format("unknown symbol '{}'", tok));
    for (char c : tok) {
      int t = find_name(alphabet, std::string_view(&c, 1));
      if (t < 0) throw std::invalid_argument(fmt::format("unknown symbol '{}'", c));
      w.push_back(t);
    }
  }
  return w;
}

std::string format_word(const std::vector<std::string>& alphabet, const Word& w) {
  bool compact = all_single_char(alphabet, 0);
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) s += ' ';
    s += alphabet.at(w[i]);
  }
  return s;
}

bool Transducer::is_initial(StateId q) const { return is_init_.at(q) != 0; }
bool Transducer::is_final(StateId q) const { return is_fin_.at(q) != 0; }

int Transducer::cmax() const {
  size_t m = 0;
  for (const auto& t : transitions) m = std::max(m, t.out.size());
  return static_cast<int>(m);
}

const std::vector<int>& Transducer::outgoing(StateId q, Symbol a) const {
  return index_.at(static_cast<size_t>(q) * input.size() + a);
}

int Transducer::state_index(std::string_view name) const { return find_name(states, name); }
int Transducer::input_index(std::string_view name) const { return find_name(input, name); }
int Transducer::output_index(std::string_view name) const { return find_name(output, name); }

bool Transducer::operator==(const Transducer& o) const {
  return kind == o.kind && states == o.states && input == o.input && output == o.output &&
         transitions == o.transitions && initial == o.initial && final_states == o.final_states;
}

void validate(const Transducer& t) {
  auto fail = [](const std::string& m) { throw ValidationError(m); };
  if (t.states.empty()) fail("no states");
  if (t.input.size() < 2 || t.input[kLeftEnd] != "^" || t.input[kRightEnd] != "$")
    fail("input alphabet must start with the endmarkers");
  auto unique = [&](const std::vector<std::string>& v, const char* what) {
    std::set<std::string> s(v.begin(), v.end());
    if (s.size() != v.size()) fail(fmt::format("duplicate {} name", what));
  };
  unique(t.states, "state");
  unique(t.input, "input symbol");
  unique(t.output, "output symbol");
  for (size_t i = 2; i < t.input.size(); ++i)
    if (t.input[i] == "^" || t.input[i] == "$") fail("endmarker inside input alphabet");
  for (const auto& s : t.output)
    if (s == "^" || s == "$") fail("endmarker inside output alphabet");
    else if (s == "-") fail("'-' is reserved for the empty output");
  int n = t.num_states();
  for (StateId q : t.initial)
    if (q < 0 || q >= n) fail("initial state out of range");
  for (StateId q : t.final_states)
    if (q < 0 || q >= n) fail("final state out of range");

  std::set<std::tuple<StateId, Symbol, Word, StateId, Dir>> seen;
  std::vector<char> enter_right(n, 0), enter_left(n, 0);
  for (StateId q : t.initial) enter_right[q] = 1;
  for (const auto& tr : t.transitions) {
    if (tr.src < 0 || tr.src >= n || tr.dst < 0 || tr.dst >= n) fail("transition state out of range");
    if (tr.read < 0 || tr.read >= t.num_input()) fail("transition symbol out of range");
    for (Symbol s : tr.out)
      if (s < 0 || s >= static_cast<int>(t.output.size())) fail("output symbol out of range");
    if (tr.read == kLeftEnd && tr.dir == Dir::Left) fail("left move on left endmarker");
    if (t.kind == Kind::OneWay && tr.dir == Dir::Left) fail("left move in one-way transducer");
    if (!seen.emplace(tr.src, tr.read, tr.out, tr.dst, tr.dir).second) fail("duplicate transition");
    (tr.dir == Dir::Right ? enter_right : enter_left)[tr.dst] = 1;
  }
  if (t.kind == Kind::Sweeping) {
    // A reversal happens when the move direction differs from the move that
    // entered the current state; it must read the endmarker on that side.
    for (const auto& tr : t.transitions) {
      if (tr.dir == Dir::Left && enter_right[tr.src] && tr.read != kRightEnd)
        fail("direction reversal away from the endmarkers in sweeping transducer");
      if (tr.dir == Dir::Right && enter_left[tr.src] && tr.read != kLeftEnd)
        fail("direction reversal away from the endmarkers in sweeping transducer");
    }
  }
}

void Transducer::finalize() {
  validate(*this);
  size_t n = states.size(), m = input.size();
  index_.assign(n * m, {});
  for (size_t i = 0; i < transitions.size(); ++i) {
    const auto& tr = transitions[i];
    index_[tr.src * m + tr.read].push_back(static_cast<int>(i));
  }
  is_init_.assign(n, 0);
  is_fin_.assign(n, 0);
  for (StateId q : initial) is_init_[q] = 1;
  for (StateId q : final_states) is_fin_[q] = 1;
}

Transducer parse_transducer(std::string_view text) {
  Transducer t;
  t.input = {"^", "$"};
  struct Pending {
    int line;
    std::vector<std::string> lhs, rhs;
    std::string out;
    bool has_out;
  };
  std::vector<Pending> pending;
  std::vector<std::string> init_names, final_names;
  std::set<std::string> keys_seen;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    size_t arrow = line.find("->");
    if (arrow != std::string_view::npos) {
      Pending p{lineno, split_ws(line.substr(0, arrow)), {}, {}, false};
      std::string_view rest = line.substr(arrow + 2);
      size_t bar = rest.find('|');
      if (bar != std::string_view::npos) {
        p.has_out = true;
        p.out = std::string(trim(rest.substr(bar + 1)));
        rest = rest.substr(0, bar);
      }
      p.rhs = split_ws(rest);
      if (p.lhs.size() != 2) throw ParseError(lineno, "expected '<state> <symbol> -> <state> <L|R> | <output>'");
      if (p.rhs.size() != 2) throw ParseError(lineno, "expected '<state> <L|R>' after '->'");
      pending.push_back(std::move(p));
      continue;
    }
    size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected a header or a transition");
    std::string key(trim(line.substr(0, colon)));
    auto vals = split_ws(line.substr(colon + 1));
    if (!keys_seen.insert(key).second) throw ParseError(lineno, fmt::format("repeated header '{}'", key));
    if (key == "states") {
      t.states = vals;
    } else if (key == "input") {
      for (const auto& v : vals) {
        if (v == "^" || v == "$") throw ParseError(lineno, "endmarkers are implicit in the input alphabet");
        t.input.push_back(v);
      }
    } else if (key == "output") {
      t.output = vals;
    } else if (key == "init") {
      init_names = vals;
    } else if (key == "final") {
      final_names = vals;
    } else if (key == "kind") {
      if (vals.size() != 1) throw ParseError(lineno, "kind takes one value");
      if (vals[0] == "twoway") t.kind = Kind::TwoWay;
      else if (vals[0] == "sweeping") t.kind = Kind::Sweeping;
      else if (vals[0] == "oneway") t.kind = Kind::OneWay;
      else throw ParseError(lineno, fmt::format("unknown kind '{}'", vals[0]));
    } else {
      throw ParseError(lineno, fmt::format("unknown header '{}'", key));
    }
  }
  if (!keys_seen.count("states")) throw ParseError(lineno, "missing 'states' header");

  auto state_of = [&](const std::string& n, int line) {
    int q = t.state_index(n);
    if (q < 0) throw ParseError(line, fmt::format("unknown state '{}'", n));
    return q;
  };
  for (const auto& n : init_names) t.initial.push_back(state_of(n, 0));
  for (const auto& n : final_names) t.final_states.push_back(state_of(n, 0));
  for (const auto& p : pending) {
    Transition tr;
    tr.src = state_of(p.lhs[0], p.line);
    tr.read = t.input_index(p.lhs[1]);
    if (tr.read < 0) throw ParseError(p.line, fmt::format("unknown input symbol '{}'", p.lhs[1]));
    tr.dst = state_of(p.rhs[0], p.line);
    if (p.rhs[1] == "R") tr.dir = Dir::Right;
    else if (p.rhs[1] == "L") tr.dir = Dir::Left;
    else throw ParseError(p.line, fmt::format("direction must be L or R, got '{}'", p.rhs[1]));
    if (p.has_out && p.out != "-") {
      try {
        tr.out = parse_word(t.output, p.out);
      } catch (const std::invalid_argument& e) {
        throw ParseError(p.line, e.what());
      }
    }
    t.transitions.push_back(std::move(tr));
  }
  t.finalize();
  return t;
}

std::string print_transducer(const Transducer& t) {
  std::ostringstream os;
  auto list = [&](const char* key, const std::vector<std::string>& v, size_t from = 0) {
    os << key << ':';
    for (size_t i = from; i < v.size(); ++i) os << ' ' << v[i];
    os << '\n';
  };
  auto names = [&](const std::vector<StateId>& ids) {
    std::vector<std::string> v;
    for (StateId q : ids) v.push_back(t.states[q]);
    return v;
  };
  os << "kind: " << kind_name(t.kind) << '\n';
  list("states", t.states);
  list("input", t.input, 2);
  list("output", t.output);
  list("init", names(t.initial));
  list("final", names(t.final_states));
  for (const auto& tr : t.transitions) {
    os << t.states[tr.src] << ' ' << t.input[tr.read] << " -> " << t.states[tr.dst] << ' '
       << (tr.dir == Dir::Right ? 'R' : 'L') << " | "
       << (tr.out.empty() ? std::string("-") : format_word(t.output, tr.out)) << '\n';
  }
  return os.str();
}

}  // namespace twoway
