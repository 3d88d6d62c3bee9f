#include "twoway/forest.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <functional>
#include <stdexcept>

namespace twoway {

namespace {

int add_node(Forest& f, ForestNode n) {
  f.nodes.push_back(std::move(n));
  return static_cast<int>(f.nodes.size()) - 1;
}

int merge(Forest& f, const std::vector<int>& kids) {
  ForestNode n;
  n.x1 = f.nodes[kids.front()].x1;
  n.x2 = f.nodes[kids.back()].x2;
  n.effect = f.nodes[kids.front()].effect;
  int h = 0;
  for (size_t i = 0; i < kids.size(); ++i) {
    if (i > 0) n.effect = effect_product(n.effect, f.nodes[kids[i]].effect);
    h = std::max(h, f.nodes[kids[i]].height);
  }
  if (n.effect.bottom) throw std::invalid_argument(fmt::format("bottom effect on [{},{}]", n.x1, n.x2));
  n.children = kids;
  n.height = h + 1;
  return add_node(f, std::move(n));
}

}  // namespace

Forest build_forest(const Transducer& t, const Run& r, const std::vector<int>& positions) {
  if (positions.size() < 2) throw std::invalid_argument("a forest needs at least two positions");
  if (!std::is_sorted(positions.begin(), positions.end()) ||
      std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw std::invalid_argument("positions must be strictly increasing");
  Forest f;
  f.positions = positions;
  f.height_bound = 3 * emax(t);
  std::vector<int> layer;
  for (size_t i = 0; i + 1 < positions.size(); ++i) {
    ForestNode leaf;
    leaf.x1 = positions[i];
    leaf.x2 = positions[i + 1];
    leaf.effect = effect_of_interval(r, leaf.x1, leaf.x2);
    if (leaf.effect.bottom) throw std::invalid_argument("bottom effect on a leaf");
    layer.push_back(add_node(f, std::move(leaf)));
  }
  while (layer.size() > 1) {
    std::vector<int> next;
    size_t i = 0;
    while (i < layer.size()) {
      const Effect& e = f.nodes[layer[i]].effect;
      size_t j = i + 1;
      if (is_idempotent(e))
        while (j < layer.size() && f.nodes[layer[j]].effect == e) ++j;
      if (j - i >= 2) {
        next.push_back(merge(f, {layer.begin() + i, layer.begin() + j}));
        i = j;
      } else if (i + 1 < layer.size()) {
        next.push_back(merge(f, {layer[i], layer[i + 1]}));
        i += 2;
      } else {
        next.push_back(layer[i]);
        ++i;
      }
    }
    layer = std::move(next);
  }
  f.root = layer.front();
  return f;
}

bool validate_forest(const Forest& f, const Run& r) {
  if (f.root < 0 || f.root >= static_cast<int>(f.nodes.size()) || f.positions.size() < 2) return false;
  const auto& X = f.positions;
  std::vector<int> leaves;
  std::vector<char> seen(f.nodes.size(), 0);
  // depth-first, left to right, recomputing heights
  std::function<int(int)> visit = [&](int v) -> int {
    if (v < 0 || v >= static_cast<int>(f.nodes.size()) || seen[v]) return -1;
    seen[v] = 1;
    const ForestNode& n = f.nodes[v];
    if (n.x1 >= n.x2) return -1;
    if (n.children.empty()) {
      leaves.push_back(v);
      if (!(n.effect == effect_of_interval(r, n.x1, n.x2))) return -1;
      return n.height == 1 ? 1 : -1;
    }
    if (n.children.size() < 2) return -1;
    int h = 0;
    Effect prod;
    for (size_t i = 0; i < n.children.size(); ++i) {
      int c = n.children[i];
      int hc = visit(c);
      if (hc < 0) return -1;
      h = std::max(h, hc);
      const ForestNode& k = f.nodes[c];
      if (i == 0 && k.x1 != n.x1) return -1;
      if (i > 0 && f.nodes[n.children[i - 1]].x2 != k.x1) return -1;
      if (i + 1 == n.children.size() && k.x2 != n.x2) return -1;
      prod = i == 0 ? k.effect : effect_product(prod, k.effect);
      if (n.children.size() > 2 && !(k.effect == n.effect)) return -1;
    }
    if (prod.bottom || !(prod == n.effect)) return -1;
    if (n.children.size() > 2 && !is_idempotent(n.effect)) return -1;
    if (n.height != h + 1) return -1;
    return h + 1;
  };
  int h = visit(f.root);
  if (h < 0) return false;
  if (leaves.size() + 1 != X.size()) return false;
  for (size_t i = 0; i < leaves.size(); ++i) {
    const ForestNode& l = f.nodes[leaves[i]];
    if (l.x1 != X[i] || l.x2 != X[i + 1]) return false;
  }
  return BigInt(h) <= f.height_bound;
}

Word zone_output(const Run& r, int x1, int x2, int k1, int k2) {
  return induced_output(r, [&](int i) { return k1 <= i && i <= k2 && x1 <= r.locs[i].pos && r.locs[i].pos <= x2; });
}

bool verify_extraction(const Run& r, int x1, int x2, int k1, int k2, const ExtractionResult& e) {
  const Loop& l = e.loop;
  if (!(x1 < l.x1 && l.x2 < x2)) return false;
  if (crossing_sequence(r, l.x1) != crossing_sequence(r, l.x2)) return false;
  Effect eff = effect_of_interval(r, l.x1, l.x2);
  if (!(eff == l.effect) || !(effect_product(eff, eff) == eff)) return false;
  RunIndex idx(r);
  int ai = idx.index_of(e.anchor);
  if (ai < 0 || ai != e.anchor_index || !(k1 < ai && ai < k2)) return false;
  AnchoredTrace tr = anchored_trace(r, l, e.component);
  if (tr.anchor != e.anchor) return false;
  Word out = tr.output(r);
  return !out.empty() && out == e.trace_output;
}

namespace {

std::optional<ExtractionResult> try_loop(const Run& r, const Loop& l, int x1, int x2, int k1, int k2, bool forest) {
  if (!(x1 < l.x1 && l.x2 < x2) || !is_idempotent(l.effect)) return std::nullopt;
  for (const auto& tr : anchored_traces(r, l)) {
    if (!(k1 < tr.anchor_index && tr.anchor_index < k2)) continue;
    Word out = tr.output(r);
    if (out.empty()) continue;
    return ExtractionResult{l, tr.component, tr.anchor, tr.anchor_index, std::move(out), forest};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExtractionResult> extract_idempotent_anchor(const Transducer& t, const Run& r, int x1, int x2, int k1,
                                                          int k2, long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  k1 = std::max(k1, 0);
  k2 = std::min(k2, r.size() - 1);
  if (static_cast<long>(zone_output(r, x1, x2, k1, k2).size()) <= bound) return std::nullopt;

  auto in_zone = [&](int i) {
    return k1 <= i && i <= k2 && x1 <= r.locs[i].pos && r.locs[i].pos <= x2;
  };
  // X_y: positions whose level-y location starts a producing step inside Z
  std::vector<std::vector<int>> by_level;
  for (int i = 0; i < r.steps(); ++i) {
    if (!in_zone(i) || !in_zone(i + 1) || r.outs[i].empty()) continue;
    int y = r.locs[i].level;
    if (static_cast<int>(by_level.size()) <= y) by_level.resize(y + 1);
    by_level[y].push_back(r.locs[i].pos);
  }
  int best = -1;
  for (int y = 0; y < static_cast<int>(by_level.size()); ++y)
    if (best < 0 || by_level[y].size() > by_level[best].size()) best = y;

  if (best >= 0 && by_level[best].size() >= 2) {
    auto X = by_level[best];
    std::sort(X.begin(), X.end());
    Forest f = build_forest(t, r, X);
    for (const auto& n : f.nodes) {
      if (n.children.size() <= 2) continue;
      for (size_t i = 0; i + 1 < n.children.size(); ++i) {
        const ForestNode& a = f.nodes[n.children[i]];
        const ForestNode& b = f.nodes[n.children[i + 1]];
        for (auto [lx1, lx2] : {std::pair{a.x1, a.x2}, std::pair{b.x1, b.x2}, std::pair{a.x1, b.x2}}) {
          Loop l{lx1, lx2, effect_of_interval(r, lx1, lx2)};
          if (l.effect.c1 != l.effect.c2) continue;
          if (auto res = try_loop(r, l, x1, x2, k1, k2, true)) return res;
        }
      }
    }
  }
  // the forest argument needs the theoretical bound; below it, search directly
  for (const auto& l : enumerate_loops(r))
    if (auto res = try_loop(r, l, x1, x2, k1, k2, false)) return res;
  return std::nullopt;
}

}  // namespace twoway
