#include "twoway/inversions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twoway/words.hpp"

namespace twoway {

namespace {

Word pieces_output(const Run& r, const std::vector<TracePiece>& pieces) {
  Word w;
  for (const auto& p : pieces)
    for (int i = p.first; i < p.last; ++i) w.insert(w.end(), r.outs[i].begin(), r.outs[i].end());
  return w;
}

Component component_of(const Flow& f, int node) {
  for (auto& c : components(f))
    if (std::find(c.cycle.begin(), c.cycle.end(), node) != c.cycle.end()) return c;
  Component c;
  c.cycle = {node};
  c.orientation = node % 2 == 0 ? Orientation::LeftToRight : Orientation::RightToLeft;
  return c;
}

}  // namespace

bool is_output_minimal_factor(const Run& r, int i, int j) {
  if (i < 0 || j >= r.size() || i > j) return false;
  const int y = r.locs[i].level;
  if (r.locs[j].level != y) return false;
  const int a = std::min(r.locs[i].pos, r.locs[j].pos), b = std::max(r.locs[i].pos, r.locs[j].pos);
  std::vector<CrossingSequence> cs;
  for (int x = a; x <= b; ++x) cs.push_back(crossing_sequence(r, x));
  // steps of level y with both endpoints at level y, by source position
  std::vector<std::pair<int, int>> producing;  // (lower pos, upper pos) of the step
  for (int k = 0; k < r.steps(); ++k)
    if (r.locs[k].level == y && r.locs[k + 1].level == y && !r.outs[k].empty())
      producing.emplace_back(std::min(r.locs[k].pos, r.locs[k + 1].pos), std::max(r.locs[k].pos, r.locs[k + 1].pos));
  for (int p = a; p <= b; ++p)
    for (int q = p + 1; q <= b; ++q) {
      if (p == a && q == b) continue;
      if (cs[p - a] != cs[q - a]) continue;
      for (auto [lo, hi] : producing)
        if (p <= lo && hi <= q) return false;
    }
  return true;
}

bool is_output_minimal_pair(const Run& r, const Loop& l, const Component& c) {
  AnchoredTrace outer = anchored_trace(r, l, c);
  for (const auto& sub : enumerate_loops(r)) {
    if (sub.x1 < l.x1 || sub.x2 > l.x2 || (sub.x1 == l.x1 && sub.x2 == l.x2)) continue;
    if (!is_idempotent(sub.effect)) continue;
    for (const auto& c2 : components(sub.effect.flow)) {
      AnchoredTrace inner = anchored_trace(r, sub, c2);
      bool contained = false;
      for (const auto& p : inner.pieces)
        for (const auto& q : outer.pieces)
          if (q.first <= p.first && p.last <= q.last) contained = true;
      if (contained && !inner.output(r).empty()) return false;
    }
  }
  return true;
}

std::vector<Anchor> producing_anchors(const Run& r, Mode mode) {
  std::vector<Anchor> out;
  for (const auto& l : enumerate_loops(r)) {
    if (mode == Mode::General) {
      if (!is_idempotent(l.effect)) continue;
      for (const auto& tr : anchored_traces(r, l)) {
        Word w = tr.output(r);
        if (w.empty()) continue;
        out.push_back({l, tr.component, tr.anchor, tr.anchor_index, tr.pieces, std::move(w)});
      }
    } else {
      for (const auto& f : intercepted_factors(r, l.x1, l.x2)) {
        if (f.kind != FactorKind::LR && f.kind != FactorKind::RL) continue;
        std::vector<TracePiece> pieces{{f.kind, f.first, f.last}};
        Word w = pieces_output(r, pieces);
        if (w.empty() || !is_output_minimal_factor(r, f.first, f.last)) continue;
        out.push_back({l, component_of(l.effect.flow, f.from), r.locs[f.first], f.first, pieces, std::move(w)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Anchor& a, const Anchor& b) { return a.index < b.index; });
  return out;
}

std::vector<Inversion> enumerate_inversions(const Run& r, Mode mode) {
  auto anchors = producing_anchors(r, mode);
  std::vector<Inversion> out;
  for (size_t i = 0; i < anchors.size(); ++i)
    for (size_t j = i + 1; j < anchors.size(); ++j)
      if (anchors[i].index < anchors[j].index && anchors[i].location.pos > anchors[j].location.pos)
        out.push_back({mode, anchors[i], anchors[j]});
  return out;
}

Word inversion_word(const Run& r, const Inversion& inv) {
  Word w = inv.first.trace_output;
  for (int i = inv.first.index; i < inv.second.index; ++i) w.insert(w.end(), r.outs[i].begin(), r.outs[i].end());
  w.insert(w.end(), inv.second.trace_output.begin(), inv.second.trace_output.end());
  return w;
}

namespace {

std::optional<P2Violation> judge(const Run& r, const Inversion& inv, long b) {
  P2Violation v;
  v.word = inversion_word(r, inv);
  v.period = minimal_period(v.word);
  v.gcd = std::gcd(static_cast<int>(inv.first.trace_output.size()), static_cast<int>(inv.second.trace_output.size()));
  v.divisibility = v.gcd % v.period != 0;
  v.too_long = b > 0 && v.period > b;
  if (!v.divisibility && !v.too_long) return std::nullopt;
  v.inversion = inv;
  return v;
}

}  // namespace

std::optional<P2Violation> check_p2(const Run& r, long b, Mode mode) {
  for (const auto& inv : enumerate_inversions(r, mode))
    if (auto v = judge(r, inv, b)) return v;
  return std::nullopt;
}

bool verify_inversion(const Run& r, const Inversion& inv) {
  RunIndex idx(r);
  for (const Anchor* a : {&inv.first, &inv.second}) {
    const Loop& l = a->loop;
    if (l.x1 < 0 || l.x2 > r.omega() || l.x1 >= l.x2) return false;
    if (crossing_sequence(r, l.x1) != crossing_sequence(r, l.x2)) return false;
    if (idx.index_of(a->location) != a->index) return false;
    if (a->location.pos != l.x1 && a->location.pos != l.x2) return false;
    if (pieces_output(r, a->pieces) != a->trace_output || a->trace_output.empty()) return false;
    if (inv.mode == Mode::General) {
      Effect e = effect_of_interval(r, l.x1, l.x2);
      if (!(effect_product(e, e) == e)) return false;
      AnchoredTrace tr = anchored_trace(r, {l.x1, l.x2, e}, a->component);
      if (tr.anchor != a->location || tr.output(r) != a->trace_output) return false;
    } else {
      if (a->pieces.size() != 1) return false;
      const auto& p = a->pieces.front();
      if (p.first != a->index || !is_output_minimal_factor(r, p.first, p.last)) return false;
      const Location s = r.locs[p.first], t = r.locs[p.last];
      bool crossing = (s.pos == l.x1 && t.pos == l.x2) || (s.pos == l.x2 && t.pos == l.x1);
      if (!crossing) return false;
      for (int i = p.first; i < p.last; ++i) {
        int j = letter_read(r.locs[i]);
        if (j < l.x1 + 1 || j > l.x2) return false;
      }
    }
  }
  return inv.first.index < inv.second.index && inv.first.location.pos > inv.second.location.pos;
}

bool verify_violation(const Run& r, const P2Violation& v, long b) {
  if (!verify_inversion(r, v.inversion)) return false;
  Word w = inversion_word(r, v.inversion);
  if (w != v.word) return false;
  int p = minimal_period(w);
  // the period is re-derived by brute force, independently of the KMP routine
  int brute = 0;
  for (int q = 1; q <= static_cast<int>(w.size()) && !brute; ++q)
    if (has_period(w, q)) brute = q;
  if (p != brute || p != v.period) return false;
  int g = std::gcd(static_cast<int>(v.inversion.first.trace_output.size()),
                   static_cast<int>(v.inversion.second.trace_output.size()));
  if (g != v.gcd) return false;
  bool div = g % p != 0, big = b > 0 && p > b;
  return div == v.divisibility && big == v.too_long && (div || big);
}

std::vector<SimClass> sim_classes(const Run& r, const std::vector<Inversion>& inversions) {
  std::vector<std::pair<int, int>> spans;
  for (const auto& inv : inversions) spans.emplace_back(inv.first.index, inv.second.index);
  std::sort(spans.begin(), spans.end());
  std::vector<SimClass> out;
  for (auto [a, b] : spans) {
    if (!out.empty() && a <= out.back().last) {
      out.back().last = std::max(out.back().last, b);
    } else {
      SimClass c;
      c.first = a;
      c.last = b;
      out.push_back(c);
    }
  }
  for (auto& c : out) {
    for (const auto& inv : inversions)
      if (c.first <= inv.first.index && inv.second.index <= c.last) {
        c.anchors.push_back(inv.first.index);
        c.anchors.push_back(inv.second.index);
      }
    std::sort(c.anchors.begin(), c.anchors.end());
    c.anchors.erase(std::unique(c.anchors.begin(), c.anchors.end()), c.anchors.end());
    c.min_x = c.max_x = r.locs[c.anchors.front()].pos;
    for (int i : c.anchors) {
      c.min_x = std::min(c.min_x, r.locs[i].pos);
      c.max_x = std::max(c.max_x, r.locs[i].pos);
    }
    c.block_first = c.first;
    while (r.locs[c.block_first].pos != c.min_x) --c.block_first;
    c.block_last = c.last;
    while (r.locs[c.block_last].pos != c.max_x) ++c.block_last;
  }
  return out;
}

std::vector<SimClass> sim_classes(const Run& r, Mode mode) { return sim_classes(r, enumerate_inversions(r, mode)); }

}  // namespace twoway
