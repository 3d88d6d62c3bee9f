#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

namespace twoway::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Word random_out(Rng& rng, const RandomSpec& spec) {
  Word w(uniform(rng, 0, spec.max_out));
  for (auto& s : w) s = uniform(rng, 0, spec.outputs - 1);
  return w;
}

void add(Transducer& t, Rng& rng, const RandomSpec& spec, StateId q, Symbol a, StateId dst, Dir d) {
  Transition tr{q, a, random_out(rng, spec), dst, d};
  for (const auto& o : t.transitions)
    if (o.src == tr.src && o.read == tr.read && o.out == tr.out && o.dst == tr.dst && o.dir == tr.dir) return;
  t.transitions.push_back(std::move(tr));
}

}  // namespace

Transducer random_transducer(Rng& rng, const RandomSpec& spec) {
  if (spec.kind == Kind::Sweeping && spec.states < 2) throw std::invalid_argument("sweeping needs two states");
  Transducer t;
  t.kind = spec.kind;
  for (int i = 0; i < spec.states; ++i) t.states.push_back(fmt::format("q{}", i));
  t.input = {"^", "$"};
  for (int i = 0; i < spec.letters; ++i) t.input.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < spec.outputs; ++i) t.output.push_back(std::string(1, static_cast<char>('x' + i)));
  t.initial = {0};
  const int n = spec.states;
  const int copies = spec.deterministic ? 1 : 2;

  if (spec.kind == Kind::Sweeping) {
    // right movers 0..nr-1, left movers nr..n-1; the last right mover is final
    const int nr = (n + 1) / 2;
    t.final_states = {nr - 1};
    auto right = [&] { return uniform(rng, 0, nr - 1); };
    auto left = [&] { return uniform(rng, nr, n - 1); };
    for (StateId q = 0; q < n; ++q)
      for (int c = 0; c < copies; ++c)
        for (Symbol a = 0; a < t.num_input(); ++a) {
          if (c > 0 && !chance(rng, 0.3)) continue;
          if (!chance(rng, spec.density)) continue;
          if (q < nr) {
            if (a == kRightEnd) {
              if (q == nr - 1 || chance(rng, 0.5)) add(t, rng, spec, q, a, nr - 1, Dir::Right);
              else add(t, rng, spec, q, a, left(), Dir::Left);
            } else {
              add(t, rng, spec, q, a, right(), Dir::Right);
            }
          } else if (a == kLeftEnd) {
            add(t, rng, spec, q, a, right(), Dir::Right);
          } else if (a != kRightEnd) {
            add(t, rng, spec, q, a, left(), Dir::Left);
          }
        }
  } else {
    t.final_states = {uniform(rng, 0, n - 1)};
    for (StateId q = 0; q < n; ++q)
      for (int c = 0; c < copies; ++c)
        for (Symbol a = 0; a < t.num_input(); ++a) {
          if (c > 0 && !chance(rng, 0.3)) continue;
          if (!chance(rng, spec.density)) continue;
          Dir d = Dir::Right;
          if (spec.kind == Kind::TwoWay && a != kLeftEnd && chance(rng, 0.4)) d = Dir::Left;
          StateId dst = uniform(rng, 0, n - 1);
          if (a == kRightEnd && d == Dir::Right) dst = t.final_states[0];
          add(t, rng, spec, q, a, dst, d);
        }
  }
  t.finalize();
  return t;
}

Word random_word(Rng& rng, const Transducer& t, int len) {
  Word w(len);
  for (auto& s : w) s = uniform(rng, 2, t.num_input() - 1);
  return w;
}

std::vector<Sample> random_runs(Rng& rng, int count, const RandomSpec& spec, int minlen, int maxlen,
                                const std::function<bool(const Run&)>& keep) {
  std::vector<Sample> out;
  for (long attempts = 0; static_cast<int>(out.size()) < count; ++attempts) {
    if (attempts > 200000L * count) throw std::runtime_error("random_runs: no accepted runs found");
    Transducer t = random_transducer(rng, spec);
    for (int k = 0; k < 8 && static_cast<int>(out.size()) < count; ++k) {
      Word u = random_word(rng, t, uniform(rng, minlen, maxlen));
      RunSet rs = enumerate_runs(t, u);
      if (rs.runs.empty()) continue;
      const Run& r = rs.runs[uniform(rng, 0, static_cast<int>(rs.runs.size()) - 1)];
      if (keep && !keep(r)) continue;
      out.push_back({t, u, r});
    }
  }
  return out;
}

std::optional<Sample> random_walk_run(Rng& rng, int len, int states, int letters, int max_out) {
  RandomSpec spec;
  spec.letters = letters;
  spec.max_out = max_out;
  Sample s;
  Transducer& t = s.t;
  for (int i = 0; i < states; ++i) t.states.push_back(fmt::format("q{}", i));
  t.input = {"^", "$"};
  for (int i = 0; i < letters; ++i) t.input.push_back(std::string(1, static_cast<char>('a' + i)));
  t.output = {"x", "y"};
  s.u = random_word(rng, t, len);
  const Word in = full_input(s.u);
  const int omega = static_cast<int>(in.size()), H = 2 * states - 1;

  std::vector<Location> walk{{0, 0}};
  std::vector<int> cnt(omega + 1, 0);
  cnt[0] = 1;
  while (walk.back().pos != omega) {
    if (static_cast<int>(walk.size()) > 8 * omega) return std::nullopt;
    const Location l = walk.back();
    const bool even = l.level % 2 == 0;
    const Symbol a = in[letter_read(l) - 1];
    // even: right to x+1 or turn back; odd: left to x-1 or turn forward
    const bool can_left = a != kLeftEnd;
    bool forward = even ? (!can_left || chance(rng, 0.6)) : (!can_left || chance(rng, 0.45));
    const int x = even ? (forward ? l.pos + 1 : l.pos) : (forward ? l.pos : l.pos - 1);
    if (cnt[x] >= H) return std::nullopt;
    walk.push_back({x, cnt[x]++});
  }

  // labels: distinct per position and level parity, and deterministic:
  // a (state, letter) pair reused later must repeat its target and direction
  std::vector<StateId> lab(walk.size());
  std::map<std::pair<int, int>, std::set<StateId>> used;
  std::map<std::pair<StateId, Symbol>, int> trans;  // -> transition id
  used[{0, 0}].insert(0);
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    const Dir d = walk[i + 1].level % 2 == 0 ? Dir::Right : Dir::Left;
    const Symbol a = in[letter_read(walk[i]) - 1];
    auto& u = used[{walk[i + 1].pos, walk[i + 1].level % 2}];
    StateId next;
    if (auto it = trans.find({lab[i], a}); it != trans.end()) {
      const Transition& tr = t.transitions[it->second];
      if (tr.dir != d) return std::nullopt;
      next = tr.dst;
    } else {
      std::vector<StateId> free;
      for (StateId q = 0; q < states; ++q)
        if (!u.count(q)) free.push_back(q);
      if (free.empty()) return std::nullopt;
      next = free[uniform(rng, 0, static_cast<int>(free.size()) - 1)];
      trans[{lab[i], a}] = static_cast<int>(t.transitions.size());
      t.transitions.push_back({lab[i], a, random_out(rng, spec), next, d});
    }
    if (u.count(next)) return std::nullopt;
    u.insert(next);
    lab[i + 1] = next;
  }
  t.initial = {0};
  t.final_states = {lab.back()};
  t.finalize();
  for (auto& r : enumerate_runs(t, s.u).runs)
    if (r.locs == walk && std::equal(r.states.begin(), r.states.end(), lab.begin())) {
      s.run = std::move(r);
      return s;
    }
  return std::nullopt;
}

std::vector<Sample> random_walk_runs(Rng& rng, int count, int minlen, int maxlen, int states,
                                     const std::function<bool(const Run&)>& keep) {
  std::vector<Sample> out;
  for (long attempts = 0; static_cast<int>(out.size()) < count; ++attempts) {
    if (attempts > 100000L * count) throw std::runtime_error("random_walk_runs: no suitable walks found");
    auto s = random_walk_run(rng, uniform(rng, minlen, maxlen), states, 2, 2);
    if (s && (!keep || keep(s->run))) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<std::vector<int>> oracle_runs(const Transducer& t, const Word& u, int cap) {
  Word in{kLeftEnd};
  in.insert(in.end(), u.begin(), u.end());
  in.push_back(kRightEnd);
  const int n = static_cast<int>(in.size());
  std::vector<std::vector<int>> found;
  std::vector<int> path;
  // visits[x] holds the states seen at position x, in order of visit
  std::vector<std::vector<StateId>> visits(n + 1);

  std::function<void(StateId, int)> dfs = [&](StateId q, int head) {
    for (int id = 0; id < static_cast<int>(t.transitions.size()); ++id) {
      const Transition& tr = t.transitions[id];
      if (tr.src != q || tr.read != in[head]) continue;
      const int x = tr.dir == Dir::Right ? head + 1 : head;
      auto& v = visits[x];
      const int level = static_cast<int>(v.size());
      if (level >= cap) continue;
      bool repeat = false;
      for (int y = level % 2; y < level; y += 2) repeat |= v[y] == tr.dst;
      if (repeat) continue;
      path.push_back(id);
      v.push_back(tr.dst);
      if (x == n) {
        if (t.is_final(tr.dst)) found.push_back(path);
      } else {
        dfs(tr.dst, tr.dir == Dir::Right ? head + 1 : head - 1);
      }
      v.pop_back();
      path.pop_back();
    }
  };
  for (StateId q0 : t.initial) {
    visits[0] = {q0};
    dfs(q0, 0);
  }
  std::sort(found.begin(), found.end());
  return found;
}

Transducer path_transducer(const std::vector<std::string>& letters, const Word& u,
                           const std::vector<Location>& path) {
  Transducer t;
  t.input = {"^", "$"};
  t.input.insert(t.input.end(), letters.begin(), letters.end());
  const int m = static_cast<int>(path.size());
  for (int i = 0; i < m; ++i) t.states.push_back(fmt::format("s{}", i));
  for (int i = 0; i + 1 < m; ++i) t.output.push_back(fmt::format("o{}", i));
  Word in = full_input(u);
  for (int i = 0; i + 1 < m; ++i) {
    const Dir d = path[i + 1].level % 2 == 0 ? Dir::Right : Dir::Left;
    t.transitions.push_back({i, in[letter_read(path[i]) - 1], {i}, i + 1, d});
  }
  t.initial = {0};
  t.final_states = {m - 1};
  t.finalize();
  return t;
}

std::string fig1_text() {
  return R"(states: q0 q1 q2 q3 q4 q5 q6 q7 q8
input: a2 a3
output: o
init: q0
final: q8
q0 ^ -> q1 R | -
q1 a2 -> q2 R | -
q2 a3 -> q3 L | -
q3 a2 -> q4 L | -
q4 ^ -> q5 R | -
q5 a2 -> q6 R | -
q6 a3 -> q7 R | -
q7 $ -> q8 R | -
)";
}

std::vector<Location> fig1_locations() {
  return {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {2, 2}, {3, 0}, {4, 0}};
}

Fig3 fig3_case() {
  // ^ l m m r $ with I = [2,4]; excursions outside I turn at ^ and $
  std::vector<Location> p = {
      {0, 0}, {1, 0}, {2, 0},                  // reach x1
      {3, 0}, {3, 1}, {2, 1},                  // alpha: LL 0 -> 1
      {1, 1}, {1, 2}, {2, 2},                  // left excursion
      {3, 2}, {4, 0},                          // beta: LR 2 -> 0
      {5, 0}, {5, 1}, {4, 1},                  // right excursion
      {3, 3}, {2, 3},                          // gamma: RL 1 -> 3
      {1, 3}, {1, 4}, {2, 4},                  // left excursion
      {3, 4}, {4, 2},                          // delta: LR 4 -> 2
      {5, 2}, {5, 3}, {4, 3},                  // right excursion
      {3, 5}, {3, 6}, {4, 4},                  // zeta: RR 3 -> 4
      {5, 4}, {6, 0}};
  Fig3 f;
  f.u = {2, 3, 3, 4};
  f.t = path_transducer({"l", "m", "r"}, f.u, p);
  f.x1 = 2;
  f.x2 = 4;
  return f;
}

Sample fig3_loop_case() {
  Fig3 f = fig3_case();
  const Run r = enumerate_runs(f.t, f.u).runs.at(0);
  std::map<Location, StateId> lab;
  std::vector<StateId> st;
  for (const auto& l : r.locs) {
    const Location key = l.pos == f.x2 ? Location{f.x1, l.level} : l;
    auto it = lab.emplace(key, static_cast<StateId>(lab.size())).first;
    st.push_back(it->second);
  }
  Sample s;
  s.u = f.u;
  s.t.input = f.t.input;
  s.t.output = f.t.output;
  for (size_t i = 0; i < lab.size(); ++i) s.t.states.push_back(fmt::format("s{}", i));
  for (int i = 0; i + 1 < r.size(); ++i) {
    const Transition& tr = f.t.transitions[r.trans[i]];
    s.t.transitions.push_back({st[i], tr.read, tr.out, st[i + 1], tr.dir});
  }
  s.t.initial = {0};
  s.t.final_states = {st.back()};
  s.t.finalize();
  s.run = enumerate_runs(s.t, s.u).runs.at(0);
  return s;
}

std::vector<OFactor> oracle_factors(const Run& r, int x1, int x2) {
  std::vector<OFactor> fs;
  auto inside = [&](int i) {
    const int a = letter_read(r.locs[i]);
    return x1 + 1 <= a && a <= x2;
  };
  for (int i = 0; i < r.steps();) {
    if (!inside(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j < r.steps() && inside(j)) ++j;
    OFactor f;
    f.first = i;
    f.last = j;
    f.from_left = r.locs[i].pos == x1;
    f.to_left = r.locs[j].pos == x1;
    f.from = r.locs[i].level;
    f.to = r.locs[j].level;
    fs.push_back(f);
    i = j;
  }
  return fs;
}

namespace {

std::map<int, OFactor> by_source(const Run& r, int x1, int x2) {
  std::map<int, OFactor> m;
  for (const auto& f : oracle_factors(r, x1, x2)) m[f.from] = f;
  return m;
}

}  // namespace

std::vector<std::vector<int>> oracle_cycles(const Run& r, int x1, int x2) {
  auto next = by_source(r, x1, x2);
  std::vector<std::vector<int>> cycles;
  std::set<int> seen;
  for (const auto& [y, f] : next) {
    if (seen.count(y)) continue;
    std::vector<int> c{y};
    int cur = f.to;
    while (cur != y && next.count(cur) && c.size() <= next.size()) {
      c.push_back(cur);
      cur = next.at(cur).to;
    }
    if (cur != y) continue;
    for (int v : c) seen.insert(v);
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    cycles.push_back(c);
  }
  return cycles;
}

std::vector<int> oracle_pump_trans(const Run& r, int x1, int x2, int n) {
  auto next = by_source(r, x1, x2);
  std::vector<std::pair<int, std::vector<int>>> anchors;  // run index, trace transitions
  for (const auto& c : oracle_cycles(r, x1, x2)) {
    const int lo = *std::min_element(c.begin(), c.end());
    const int hi = *std::max_element(c.begin(), c.end());
    const Location a{lo % 2 == 0 ? x1 : x2, hi};
    int ai = -1;
    for (int i = 0; i < r.size(); ++i)
      if (r.locs[i] == a) ai = i;
    std::vector<int> tr;
    int y = hi;
    do {
      const OFactor& f = next.at(y);
      tr.insert(tr.end(), r.trans.begin() + f.first, r.trans.begin() + f.last);
      y = f.to;
    } while (y != hi);
    anchors.emplace_back(ai, tr);
  }
  std::sort(anchors.begin(), anchors.end());
  std::vector<int> out;
  int prev = 0;
  for (const auto& [ai, tr] : anchors) {
    out.insert(out.end(), r.trans.begin() + prev, r.trans.begin() + ai);
    for (int k = 1; k < n; ++k) out.insert(out.end(), tr.begin(), tr.end());
    prev = ai;
  }
  out.insert(out.end(), r.trans.begin() + prev, r.trans.end());
  return out;
}

int naive_period(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    bool ok = true;
    for (int i = 0; i + p < n && ok; ++i) ok = w[i] == w[i + p];
    if (ok) return p;
  }
  return 0;
}

Flow oracle_flow(const Run& r, int x1, int x2) {
  Flow f = Flow::make(crossing_sequence(r, x1).size(), crossing_sequence(r, x2).size());
  for (const auto& o : oracle_factors(r, x1, x2)) {
    FactorKind k = o.from_left ? (o.to_left ? FactorKind::LL : FactorKind::LR)
                               : (o.to_left ? FactorKind::RL : FactorKind::RR);
    f.add(k, o.from, o.to);
  }
  return f;
}

mpz_class gmp_emax(int q) {
  const unsigned long h = 2 * q - 1;
  mpz_class four, qq;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, h);
  mpz_ui_pow_ui(qq.get_mpz_t(), q, 4 * h);
  return four * qq;
}

mpz_class gmp_sweeping(int q, int cmax) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q, 2 * q - 1);
  return cmax * p + 1;
}

GmpGeneral gmp_general(int q, int cmax) {
  const int h = 2 * q - 1;
  GmpGeneral g;
  g.coeff = cmax * h;
  g.exponent = 3 * gmp_emax(q);
  g.addend = 4 * cmax * h + 4 * cmax;
  return g;
}

std::uint64_t gmp_residue(const GmpGeneral& g, std::uint64_t m) {
  mpz_class mod(std::to_string(m)), two(2), p;
  mpz_powm(p.get_mpz_t(), two.get_mpz_t(), g.exponent.get_mpz_t(), mod.get_mpz_t());
  mpz_class v = (g.coeff * p + g.addend) % mod;
  return std::stoull(v.get_str());
}

}  // namespace twoway::testing
