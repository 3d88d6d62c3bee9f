#include "twoway_tools/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace twoway::corpus {

namespace {

// Small helper assigning ids to named states and symbols.
class Builder {
 public:
  Builder(Kind k, const std::vector<std::string>& letters) {
    t_.kind = k;
    t_.input = {"^", "$"};
    for (const auto& l : letters) {
      t_.input.push_back(l);
      t_.output.push_back(l);
    }
  }
  int q(const std::string& name) {
    auto [it, fresh] = ids_.emplace(name, static_cast<int>(t_.states.size()));
    if (fresh) t_.states.push_back(name);
    return it->second;
  }
  Symbol in(const std::string& s) const {
    int i = t_.input_index(s);
    if (i < 0) throw std::logic_error(fmt::format("corpus: unknown letter {}", s));
    return i;
  }
  Word out(const std::string& s) const {
    Word w;
    for (char c : s) w.push_back(t_.output_index(std::string(1, c)));
    return w;
  }
  void add(const std::string& src, const std::string& read, const std::string& dst, Dir d, const std::string& o = "") {
    Transition tr{q(src), in(read), out(o), q(dst), d};
    if (std::find(t_.transitions.begin(), t_.transitions.end(), tr) == t_.transitions.end())
      t_.transitions.push_back(std::move(tr));
  }
  Transducer done(const std::string& init, const std::string& fin) {
    t_.initial = {q(init)};
    t_.final_states = {q(fin)};
    t_.finalize();
    return std::move(t_);
  }
  const std::vector<std::string>& letters() const { return t_.output; }

 private:
  Transducer t_;
  std::map<std::string, int> ids_;
};

std::vector<std::string> letters_of(const std::string& chars) {
  std::set<char> s(chars.begin(), chars.end());
  std::vector<std::string> v;
  for (char c : s) v.emplace_back(1, c);
  return v;
}

const char* kR = "R";
const char* kBack = "back";
const char* kCopy = "copy";
const char* kEnd = "end";

// Rewind to the left endmarker, then copy the input once more and accept.
void second_copy(Builder& b) {
  for (const auto& l : b.letters()) {
    b.add(kBack, l, kBack, Dir::Left);
    b.add(kCopy, l, kCopy, Dir::Right, l);
  }
  b.add(kBack, "^", kCopy, Dir::Right);
  b.add(kCopy, "$", kEnd, Dir::Right);
}

bool is_letters(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      v.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  v.push_back(cur);
  return v;
}

}  // namespace

Transducer double_star_word(const std::string& w) {
  if (!is_letters(w)) throw std::invalid_argument(fmt::format("double: bad word '{}'", w));
  Builder b(Kind::Sweeping, letters_of(w));
  const int k = static_cast<int>(w.size());
  b.add("init", "^", "p0", Dir::Right);
  for (int j = 0; j < k; ++j)
    b.add(fmt::format("p{}", j), std::string(1, w[j]), fmt::format("p{}", (j + 1) % k), Dir::Right,
          std::string(1, w[j]));
  b.add("p0", "$", kBack, Dir::Left);
  second_copy(b);
  return b.done("init", kEnd);
}

Transducer double_star_letters(const std::vector<char>& letters) {
  std::string s(letters.begin(), letters.end());
  if (!is_letters(s)) throw std::invalid_argument("double: bad letter list");
  Builder b(Kind::Sweeping, letters_of(s));
  b.add("init", "^", kR, Dir::Right);
  for (const auto& l : b.letters()) b.add(kR, l, kR, Dir::Right, l);
  b.add(kR, "$", kBack, Dir::Left);
  second_copy(b);
  return b.done("init", kEnd);
}

Transducer double_finite(const std::vector<std::string>& words) {
  std::string all;
  for (const auto& w : words) {
    if (!w.empty() && !is_letters(w)) throw std::invalid_argument(fmt::format("double: bad word '{}'", w));
    all += w;
  }
  if (all.empty()) all = "a";
  Builder b(Kind::Sweeping, letters_of(all));
  // first pass walks the trie of the set
  b.add("init", "^", "t_", Dir::Right);
  for (const auto& w : words) {
    for (size_t i = 0; i < w.size(); ++i)
      b.add("t_" + w.substr(0, i), std::string(1, w[i]), "t_" + w.substr(0, i + 1), Dir::Right, std::string(1, w[i]));
    b.add("t_" + w, "$", kBack, Dir::Left);
  }
  second_copy(b);
  return b.done("init", kEnd);
}

Transducer running() {
  Builder b(Kind::TwoWay, {"#", "a", "b", "c"});
  const std::vector<std::string> abc{"a", "b", "c"};
  // A<k>: first copy of u_i, k = |prefix| mod 3 while it is in (abc)^*, D otherwise
  b.add("init", "^", "A0", Dir::Right);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      b.add(fmt::format("A{}", k), abc[j], j == k ? fmt::format("A{}", (k + 1) % 3) : "AD", Dir::Right, abc[j]);
  for (const auto& l : abc) b.add("AD", l, "AD", Dir::Right, l);
  // C<m><e>: parity e of u_(i+1), m says whether u_i is in (abc)^*
  for (const char* k : {"A0", "A1", "A2", "AD"}) {
    const int m = std::string(k) == "A0";
    b.add(k, "#", fmt::format("C{}0", m), Dir::Right);
    // last factor: u_(n+1) is empty
    b.add(k, "$", m ? "Lback" : kEnd, m ? Dir::Left : Dir::Right);
  }
  for (int m = 0; m < 2; ++m)
    for (int e = 0; e < 2; ++e) {
      const std::string c = fmt::format("C{}{}", m, e);
      for (const auto& l : abc) b.add(c, l, fmt::format("C{}{}", m, 1 - e), Dir::Right);
      const bool twice = m == 1 && e == 0;
      for (const char* sep : {"#", "$"}) b.add(c, sep, twice ? "B1" : "B3", Dir::Left);
    }
  // B1: back over u_(i+1); B2: back over u_i; K: second copy of u_i
  for (const auto& l : abc) {
    b.add("B1", l, "B1", Dir::Left);
    b.add("B2", l, "B2", Dir::Left);
    b.add("B3", l, "B3", Dir::Left);
    b.add("K", l, "K", Dir::Right, l);
    b.add("Lback", l, "Lback", Dir::Left);
    b.add("LK", l, "LK", Dir::Right, l);
  }
  b.add("B1", "#", "B2", Dir::Left);
  b.add("B2", "#", "K", Dir::Right);
  b.add("B2", "^", "K", Dir::Right);
  b.add("K", "#", "A0", Dir::Right, "#");
  b.add("B3", "#", "A0", Dir::Right, "#");
  b.add("Lback", "#", "LK", Dir::Right);
  b.add("Lback", "^", "LK", Dir::Right);
  b.add("LK", "$", kEnd, Dir::Right);
  return b.done("init", kEnd);
}

Transducer fn(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument(fmt::format("fn: n must be in 1..3, got {}", n));
  Builder b(Kind::Sweeping, {"0", "1", "a", "b"});
  // Pass j checks bit j (1 = most significant) of every block a_i w_i:
  // the bit starts at 0, ends at 1, and flips exactly after a block whose
  // lower bits are all 1. Pass 1 also rejects the wrap-around 1 -> 0.
  // State c<j>_<k>_<e>_<v>_<l>: k letters of the block read, e the expected
  // bit, v the bit read, l whether the lower bits read so far are all 1.
  auto st = [](int j, int k, int e, int v, int l) { return fmt::format("c{}_{}_{}_{}_{}", j, k, e, v, l); };
  b.add("init", "^", fmt::format("s{}", 1), Dir::Right);
  for (int j = 1; j <= n; ++j) {
    const std::string start = fmt::format("s{}", j);
    for (const char* a : {"a", "b"}) b.add(start, a, st(j, 1, 0, 0, 1), Dir::Right);
    for (int e = 0; e < 2; ++e)
      for (int v = 0; v < 2; ++v)
        for (int l = 0; l < 2; ++l) {
          for (int k = 1; k <= n; ++k) {
            for (int bit = 0; bit < 2; ++bit) {
              int v2 = v, l2 = l;
              if (k == j) {
                if (bit != e) continue;
                v2 = bit;
              } else if (k > j) {
                l2 = l && bit == 1;
              }
              b.add(st(j, k, e, v, l), bit ? "1" : "0", st(j, k + 1, e, v2, l2), Dir::Right);
            }
          }
          // block complete: the next expected bit flips iff the lower bits are all 1
          const std::string full = st(j, n + 1, e, v, l);
          const int next = v ^ l;
          if (!(j == 1 && v == 1 && l == 1))
            for (const char* a : {"a", "b"}) b.add(full, a, st(j, 1, next, 0, 1), Dir::Right);
          if (v == 1) b.add(full, "$", fmt::format("r{}", j), Dir::Left);
        }
    const std::string ret = fmt::format("r{}", j);
    for (const char* s : {"0", "1", "a", "b"}) b.add(ret, s, ret, Dir::Left);
    b.add(ret, "^", j < n ? fmt::format("s{}", j + 1) : std::string("first"), Dir::Right);
  }
  for (const char* s : {"0", "1", "a", "b"}) b.add("first", s, "first", Dir::Right, s);
  b.add("first", "$", kBack, Dir::Left);
  second_copy(b);
  return b.done("init", kEnd);
}

std::string fn_input(int n, const std::string& letters) {
  const int m = 1 << n;
  if (static_cast<int>(letters.size()) != m) throw std::invalid_argument("fn_input: need 2^n letters");
  std::string u;
  for (int i = 0; i < m; ++i) {
    u += letters[i];
    for (int k = n - 1; k >= 0; --k) u += (i >> k) & 1 ? '1' : '0';
  }
  return u;
}

Transducer generate(std::string_view spec_in) {
  std::string spec;
  for (char c : spec_in)
    if (!std::isspace(static_cast<unsigned char>(c))) spec += c;
  if (spec == "running") return running();
  if (spec.rfind("fn(", 0) == 0 && spec.back() == ')') {
    const std::string arg = spec.substr(3, spec.size() - 4);
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit))
      throw std::invalid_argument(fmt::format("fn: bad parameter '{}'", arg));
    return fn(std::stoi(arg));
  }
  if (spec.rfind("double(", 0) == 0 && spec.back() == ')') {
    const std::string r = spec.substr(7, spec.size() - 8);
    if (r.size() >= 3 && r.front() == '(' && r.substr(r.size() - 2) == ")*") {
      const std::string inner = r.substr(1, r.size() - 3);
      if (inner.find('+') == std::string::npos) return double_star_word(inner);
      std::vector<char> ls;
      for (const auto& alt : split(inner, '+')) {
        if (alt.size() != 1 || !is_letters(alt))
          throw std::invalid_argument(fmt::format("double: unsupported star of '{}'", inner));
        ls.push_back(alt[0]);
      }
      return double_star_letters(ls);
    }
    std::string body = r;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    if (body.find_first_of("()*") == std::string::npos) {
      auto ws = split(body, '+');
      for (auto& w : ws)
        if (w == "e" || w == "eps") w.clear();
      return double_finite(ws);
    }
    throw std::invalid_argument(fmt::format("double: unsupported language '{}'", r));
  }
  throw std::invalid_argument(fmt::format("unsupported corpus spec '{}'", spec));
}

std::vector<std::string> known_specs() {
  return {"double((abc)*)", "double((ab)*)", "double((a+b)*)", "double(ab+ba+abc)", "running", "fn(1)", "fn(2)", "fn(3)"};
}

}  // namespace twoway::corpus
