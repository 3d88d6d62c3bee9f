#include "twoway/run.hpp"

#include <fmt/format.h>
#include <map>
#include <stdexcept>
#include <tuple>

namespace twoway {

RunIndex::RunIndex(const Run& r) {
  int hi = r.omega();
  for (const auto& l : r.locs) hi = std::max(hi, l.pos);
  by_pos_.assign(hi + 1, {});
  for (int i = 0; i < r.size(); ++i) {
    const auto& l = r.locs[i];
    auto& v = by_pos_[l.pos];
    if (static_cast<int>(v.size()) <= l.level) v.resize(l.level + 1, -1);
    v[l.level] = i;
  }
}

int RunIndex::index_of(const Location& l) const {
  if (l.pos < 0 || l.pos >= static_cast<int>(by_pos_.size())) return -1;
  const auto& v = by_pos_[l.pos];
  if (l.level < 0 || l.level >= static_cast<int>(v.size())) return -1;
  return v[l.level];
}

Word full_input(const Word& u) {
  Word w;
  w.reserve(u.size() + 2);
  w.push_back(kLeftEnd);
  w.insert(w.end(), u.begin(), u.end());
  w.push_back(kRightEnd);
  return w;
}

namespace {

struct Enumerator {
  const Transducer& t;
  Word input;
  int omega;
  int cap;
  RunSet result;
  Run cur;
  std::vector<std::vector<StateId>> cs;

  void dfs() {
    const Location here = cur.locs.back();
    const StateId q = cur.states.back();
    if (here.pos == omega) {
      if (t.is_final(q)) {
        Run r = cur;
        r.accepts = true;
        result.runs.push_back(std::move(r));
      }
      return;
    }
    const Symbol a = input[letter_read(here) - 1];
    for (int tid : t.outgoing(q, a)) {
      const Transition& tr = t.transitions[tid];
      int npos = here.pos;
      if (here.level % 2 == 0 && tr.dir == Dir::Right) npos = here.pos + 1;
      if (here.level % 2 == 1 && tr.dir == Dir::Left) npos = here.pos - 1;
      if (npos < 0) continue;
      int nlevel = static_cast<int>(cs[npos].size());
      if (nlevel >= cap) {
        result.cap_exceeded = true;
        continue;
      }
      bool repeat = false;
      for (int y = nlevel % 2; y < nlevel; y += 2)
        if (cs[npos][y] == tr.dst) repeat = true;
      if (repeat) continue;
      cs[npos].push_back(tr.dst);
      cur.locs.push_back({npos, nlevel});
      cur.states.push_back(tr.dst);
      cur.trans.push_back(tid);
      cur.outs.push_back(tr.out);
      dfs();
      cur.locs.pop_back();
      cur.states.pop_back();
      cur.trans.pop_back();
      cur.outs.pop_back();
      cs[npos].pop_back();
    }
  }
};

}  // namespace

RunSet enumerate_runs(const Transducer& t, const Word& u, int heightCap) {
  Enumerator e{t, full_input(u), 0, heightCap > 0 ? heightCap : 2 * t.num_states() - 1, {}, {}, {}};
  e.omega = static_cast<int>(e.input.size());
  e.cs.assign(e.omega + 1, {});
  for (StateId q0 : t.initial) {
    e.cur = Run{};
    e.cur.input = e.input;
    e.cur.locs = {{0, 0}};
    e.cur.states = {q0};
    e.cs[0] = {q0};
    e.dfs();
    e.cs[0].clear();
  }
  return std::move(e.result);
}

Word output_of(const Run& r) {
  Word w;
  for (const auto& o : r.outs) w.insert(w.end(), o.begin(), o.end());
  return w;
}

CrossingSequence crossing_sequence(const Run& r, int x) {
  RunIndex idx(r);
  CrossingSequence c;
  if (x < 0 || x > r.omega()) return c;
  for (int i : idx.at(x)) c.push_back(i >= 0 ? r.states[i] : -1);
  return c;
}

Run factor_by_index(const Run& r, int i, int j) {
  if (i < 0 || j >= r.size() || i > j) throw std::out_of_range("factor endpoints not in run order");
  Run f;
  f.input = r.input;
  f.locs.assign(r.locs.begin() + i, r.locs.begin() + j + 1);
  f.states.assign(r.states.begin() + i, r.states.begin() + j + 1);
  f.trans.assign(r.trans.begin() + i, r.trans.begin() + j);
  f.outs.assign(r.outs.begin() + i, r.outs.begin() + j);
  f.origin = r.origin + i;
  return f;
}

Run factor(const Run& r, const Location& l1, const Location& l2) {
  RunIndex idx(r);
  int i = idx.index_of(l1), j = idx.index_of(l2);
  if (i < 0 || j < 0) throw std::out_of_range("location not on run");
  return factor_by_index(r, i, j);
}

Run concat(const Run& a, const Run& b) {
  if (a.locs.empty()) return b;
  if (b.locs.empty()) return a;
  if (a.states.back() != b.states.front() || a.locs.back().level % 2 != b.locs.front().level % 2)
    throw std::invalid_argument("fragments do not compose");
  Run c = a;
  c.locs.insert(c.locs.end(), b.locs.begin() + 1, b.locs.end());
  c.states.insert(c.states.end(), b.states.begin() + 1, b.states.end());
  c.trans.insert(c.trans.end(), b.trans.begin(), b.trans.end());
  c.outs.insert(c.outs.end(), b.outs.begin(), b.outs.end());
  c.accepts = false;
  return c;
}

Word induced_output(const Run& r, const std::function<bool(int)>& keep) {
  Word w;
  bool prev = r.size() > 0 && keep(0);
  for (int i = 0; i < r.steps(); ++i) {
    bool next = keep(i + 1);
    if (prev && next) w.insert(w.end(), r.outs[i].begin(), r.outs[i].end());
    prev = next;
  }
  return w;
}

LocationSetOutput subsequence_output(const Run& r, const std::set<Location>& z) {
  LocationSetOutput res;
  res.locations = z;
  res.output = induced_output(r, [&](int i) { return z.count(r.locs[i]) > 0; });
  return res;
}

namespace {

void relevel(Run& r) {
  std::map<int, int> visits;
  for (auto& l : r.locs) l.level = visits[l.pos]++;
}

// First pair (i, j), i < j, sharing position, state and level parity.
std::optional<std::pair<int, int>> first_repeat(const Run& r) {
  std::map<std::tuple<int, StateId, int>, int> seen;
  for (int j = 0; j < r.size(); ++j) {
    auto key = std::make_tuple(r.locs[j].pos, r.states[j], r.locs[j].level % 2);
    auto [it, fresh] = seen.emplace(key, j);
    if (!fresh) return std::make_pair(it->second, j);
  }
  return std::nullopt;
}

}  // namespace

bool is_normalized(const Run& r) { return !first_repeat(r).has_value(); }

Run normalize(const Run& r) {
  Run n = r;
  while (auto rep = first_repeat(n)) {
    auto [i, j] = *rep;
    n.locs.erase(n.locs.begin() + i, n.locs.begin() + j);
    n.states.erase(n.states.begin() + i, n.states.begin() + j);
    n.trans.erase(n.trans.begin() + i, n.trans.begin() + j);
    n.outs.erase(n.outs.begin() + i, n.outs.begin() + j);
    relevel(n);
  }
  return n;
}

std::string check_run(const Transducer& t, const Run& r) {
  if (r.locs.empty()) return "empty run";
  if (r.states.size() != r.locs.size() || r.trans.size() + 1 != r.locs.size() ||
      r.outs.size() != r.trans.size())
    return "inconsistent field sizes";
  for (int i = 0; i < r.steps(); ++i) {
    const Location a = r.locs[i], b = r.locs[i + 1];
    if (r.trans[i] < 0 || r.trans[i] >= static_cast<int>(t.transitions.size()))
      return fmt::format("step {}: unknown transition", i);
    const Transition& tr = t.transitions[r.trans[i]];
    int j = letter_read(a);
    if (j < 1 || j > r.omega()) return fmt::format("step {}: no letter to read", i);
    if (tr.src != r.states[i] || tr.dst != r.states[i + 1])
      return fmt::format("step {}: states do not match transition", i);
    if (tr.read != r.input[j - 1]) return fmt::format("step {}: wrong letter", i);
    if (tr.out != r.outs[i]) return fmt::format("step {}: wrong output", i);
    bool even = a.level % 2 == 0;
    bool ok;
    if (even && tr.dir == Dir::Right) ok = b.pos == a.pos + 1 && b.level % 2 == 0;
    else if (!even && tr.dir == Dir::Left) ok = b.pos == a.pos - 1 && b.level % 2 == 1;
    else ok = b.pos == a.pos && b.level == a.level + 1;
    if (!ok) return fmt::format("step {}: illegal shape", i);
  }
  if (r.origin == 0 && r.locs.front() == Location{0, 0}) {
    Run copy = r;
    relevel(copy);
    if (copy.locs != r.locs) return "levels are not visit indices";
  }
  if (r.accepts) {
    if (r.locs.front() != Location{0, 0} || !t.is_initial(r.states.front()))
      return "does not start at (0,0) in an initial state";
    if (r.locs.back() != Location{r.omega(), 0} || !t.is_final(r.states.back()))
      return "does not end at (omega,0) in a final state";
    RunIndex idx(r);
    for (int x = 0; x <= r.omega(); ++x)
      if (idx.height(x) % 2 == 0) return fmt::format("even crossing sequence at {}", x);
  }
  return {};
}

}  // namespace twoway
