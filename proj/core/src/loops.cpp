#include "twoway/loops.hpp"

#include <algorithm>
#include <bit>
#include <fmt/format.h>
#include <map>
#include <stdexcept>
#include <tuple>

namespace twoway {

std::vector<Loop> enumerate_loops(const Run& r) {
  std::vector<CrossingSequence> cs;
  for (int x = 0; x <= r.omega(); ++x) cs.push_back(crossing_sequence(r, x));
  std::vector<Loop> loops;
  // loops never contain an endmarker, so pumping keeps the input well formed
  for (int x1 = 1; x1 < r.omega(); ++x1)
    for (int x2 = x1 + 1; x2 < r.omega(); ++x2)
      if (cs[x1] == cs[x2]) loops.push_back({x1, x2, effect_of_interval(r, x1, x2)});
  return loops;
}

Loop make_loop(const Run& r, int x1, int x2) {
  if (x1 < 1 || x2 >= r.omega() || x1 >= x2)
    throw std::invalid_argument(fmt::format("[{},{}] is not an interval of the run", x1, x2));
  if (crossing_sequence(r, x1) != crossing_sequence(r, x2))
    throw std::invalid_argument(fmt::format("[{},{}] is not a loop", x1, x2));
  return {x1, x2, effect_of_interval(r, x1, x2)};
}

bool is_idempotent(const Effect& e) { return !e.bottom && effect_product(e, e) == e; }

bool is_idempotent(const Run&, const Loop& l) { return is_idempotent(l.effect); }

int Component::min() const { return *std::min_element(cycle.begin(), cycle.end()); }
int Component::max() const { return *std::max_element(cycle.begin(), cycle.end()); }

std::vector<Component> components(const Flow& f) {
  std::vector<Component> out;
  if (f.bottom) return out;
  Rel e = f.edges();
  int n = f.nodes();
  std::vector<int> succ(n, -1);
  for (int i = 0; i < n; ++i)
    if (e[i]) succ[i] = std::countr_zero(e[i]);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // walk from s; a component is found only if the walk returns to s
    std::vector<int> path;
    int v = s;
    while (v >= 0 && !seen[v]) {
      seen[v] = 1;
      path.push_back(v);
      v = succ[v];
    }
    if (v != s) continue;
    Component c;
    c.cycle = path;  // s is the smallest unseen node, hence the minimum
    c.orientation = s % 2 == 0 ? Orientation::LeftToRight : Orientation::RightToLeft;
    out.push_back(std::move(c));
  }
  return out;
}

Word AnchoredTrace::output(const Run& r) const {
  Word w;
  for (const auto& p : pieces)
    for (int i = p.first; i < p.last; ++i) w.insert(w.end(), r.outs[i].begin(), r.outs[i].end());
  return w;
}

std::vector<int> AnchoredTrace::transitions(const Run& r) const {
  std::vector<int> t;
  for (const auto& p : pieces) t.insert(t.end(), r.trans.begin() + p.first, r.trans.begin() + p.last);
  return t;
}

Run AnchoredTrace::materialize(const Run& r) const {
  int d = loop.x2 - loop.x1;
  Run out;
  out.input = r.input;
  int shift = 0;
  for (size_t k = 0; k < pieces.size(); ++k) {
    const auto& p = pieces[k];
    Run f = factor_by_index(r, p.first, p.last);
    if (k > 0) {
      bool ended_right = pieces[k - 1].kind == FactorKind::LR || pieces[k - 1].kind == FactorKind::RR;
      shift += ended_right ? d : -d;
    }
    for (auto& l : f.locs) l.pos += shift;
    if (k == 0) {
      out = f;
    } else {
      out.locs.insert(out.locs.end(), f.locs.begin() + 1, f.locs.end());
      out.states.insert(out.states.end(), f.states.begin() + 1, f.states.end());
      out.trans.insert(out.trans.end(), f.trans.begin(), f.trans.end());
      out.outs.insert(out.outs.end(), f.outs.begin(), f.outs.end());
    }
  }
  return out;
}

AnchoredTrace anchored_trace(const Run& r, const Loop& l, const Component& c) {
  if (!is_idempotent(l.effect)) throw std::invalid_argument("trace undefined");
  AnchoredTrace t;
  t.loop = l;
  t.component = c;
  int top = c.max();
  t.anchor = {c.orientation == Orientation::LeftToRight ? l.x1 : l.x2, top};
  RunIndex idx(r);
  t.anchor_index = idx.index_of(t.anchor);
  if (t.anchor_index < 0) throw std::invalid_argument("anchor not on the run");
  auto factors = intercepted_factors(r, l.x1, l.x2);
  auto starts_at = [&](int y) -> const InterceptedFactor* {
    bool left = y % 2 == 0;
    for (const auto& f : factors) {
      bool from_left = f.kind == FactorKind::LL || f.kind == FactorKind::LR;
      if (f.from == y && from_left == left) return &f;
    }
    return nullptr;
  };
  int y = top;
  do {
    const InterceptedFactor* f = starts_at(y);
    if (!f) throw std::invalid_argument(fmt::format("component node {} has no factor", y));
    t.pieces.push_back({f->kind, f->first, f->last});
    y = f->to;
  } while (y != top && t.pieces.size() <= c.cycle.size());
  if (y != top) throw std::invalid_argument("component is not a cycle of the loop");
  return t;
}

std::vector<AnchoredTrace> anchored_traces(const Run& r, const Loop& l) {
  std::vector<AnchoredTrace> out;
  for (const auto& c : components(l.effect.flow)) out.push_back(anchored_trace(r, l, c));
  std::sort(out.begin(), out.end(),
            [](const AnchoredTrace& a, const AnchoredTrace& b) { return a.anchor_index < b.anchor_index; });
  return out;
}

PumpResult pump(const Run& r, const Loop& l, int n) {
  if (n < 1) throw std::invalid_argument("pump needs at least one copy");
  if (l.x1 < 1 || l.x2 >= r.omega() || l.x1 >= l.x2 || crossing_sequence(r, l.x1) != crossing_sequence(r, l.x2))
    throw std::invalid_argument(fmt::format("[{},{}] is not a loop", l.x1, l.x2));
  const int x1 = l.x1, x2 = l.x2, d = x2 - x1;

  PumpResult res;
  Word in(r.input.begin(), r.input.begin() + x1);
  for (int k = 0; k < n; ++k) in.insert(in.end(), r.input.begin() + x1, r.input.begin() + x2);
  in.insert(in.end(), r.input.begin() + x2, r.input.end());
  res.word.assign(in.begin() + 1, in.end() - 1);
  const int omega = static_cast<int>(in.size());

  auto original_pos = [&](int P, bool even) {
    if (even) {
      if (P < x1) return P;
      if (P < x1 + n * d) return x1 + (P - x1) % d;
      return P - (n - 1) * d;
    }
    if (P <= x1) return P;
    if (P <= x1 + n * d) return x1 + (P - x1 - 1) % d + 1;
    return P - (n - 1) * d;
  };
  // normalized runs visit each (position, state, parity) at most once
  std::map<std::tuple<int, StateId, int>, int> where;
  for (int i = 0; i < r.size(); ++i) where.emplace(std::make_tuple(r.locs[i].pos, r.states[i], r.locs[i].level % 2), i);

  Run& p = res.run;
  p.input = in;
  p.accepts = r.accepts;
  p.locs = {r.locs.front()};
  p.states = {r.states.front()};
  std::vector<int> visits(omega + 1, 0);
  visits[p.locs[0].pos] = 1;
  const long guard = static_cast<long>(r.size()) * (n + 1) + 16;
  while (true) {
    Location here = p.locs.back();
    bool even = here.level % 2 == 0;
    auto it = where.find({original_pos(here.pos, even), p.states.back(), even ? 0 : 1});
    if (it == where.end()) throw std::logic_error("pumped run left the original run");
    int i = it->second;
    if (i == r.size() - 1) break;
    if (p.steps() > guard) throw std::logic_error("pumped run does not terminate");
    const int tid = r.trans[i];
    const Location a = r.locs[i], b = r.locs[i + 1];
    int npos = here.pos + (b.pos - a.pos);
    p.locs.push_back({npos, visits[npos]++});
    p.states.push_back(r.states[i + 1]);
    p.trans.push_back(tid);
    p.outs.push_back(r.outs[i]);
  }
  int endpos = r.locs.back().pos;
  if (endpos >= x2 && p.locs.back().pos != endpos + (n - 1) * d)
    throw std::logic_error("pumped run ends at the wrong position");
  return res;
}

}  // namespace twoway
