#include "twoway/decomposition.hpp"

#include <algorithm>

namespace twoway {

namespace {

int run_height(const Run& r, int height) {
  if (height > 0) return height;
  RunIndex idx(r);
  int h = 1;
  for (int x = 0; x <= r.omega(); ++x) h = std::max(h, idx.height(x));
  return h;
}

Word range_output(const Run& r, int from, int to) {
  Word w;
  for (int i = from; i < to; ++i) w.insert(w.end(), r.outs[i].begin(), r.outs[i].end());
  return w;
}

std::optional<std::vector<int>> general_diagonal(const Run& r, int from, int to, long b) {
  const int x = r.locs[from].pos, x2 = r.locs[to].pos;
  std::vector<int> chosen;
  int prev = from;
  for (int z = x; z <= x2; ++z) {
    auto ok = [&](int k) {
      Word up = induced_output(r, [&](int i) { return k <= i && i <= to && r.locs[i].pos <= z; });
      if (static_cast<long>(up.size()) > b) return false;
      Word down = induced_output(r, [&](int i) { return from <= i && i <= k && r.locs[i].pos >= z; });
      return static_cast<long>(down.size()) <= b;
    };
    int pick = -1, fallback = -1;
    for (int k = from; k <= to; ++k) {
      if (r.locs[k].pos != z || !ok(k)) continue;
      if (fallback < 0) fallback = k;
      if (k >= prev) {
        pick = k;
        break;
      }
    }
    if (pick < 0) pick = fallback;
    if (pick < 0) return std::nullopt;
    chosen.push_back(pick);
    prev = std::max(prev, pick);
  }
  return chosen;
}

// Chain A (F A)* where F are floors and A produce at most cap symbols
// without moving left overall.
std::optional<std::vector<int>> sweeping_diagonal(const Run& r, int from, int to, long cap) {
  const int n = to - from + 1;
  std::vector<long> pre(n, 0);  // output length of r[from..from+i]
  for (int i = 1; i < n; ++i) pre[i] = pre[i - 1] + static_cast<long>(r.outs[from + i - 1].size());
  // parent[s] = (previous A start, floor start) for each reachable A start s
  std::vector<std::pair<int, int>> parent(n, {-2, -2});
  parent[0] = {-1, -1};
  for (int s = 0; s < n; ++s) {
    if (parent[s].first == -2) continue;
    for (int e = s; e < n; ++e) {
      if (pre[e] - pre[s] > cap) break;
      if (r.locs[from + e].pos < r.locs[from + s].pos) continue;
      if (e == n - 1) {
        std::vector<int> chain{from + e, from + s};
        // a floor [e', s] sits between the A pieces [s', e'] and [s, ...]
        for (int cur = s; parent[cur].first >= 0; cur = parent[cur].first) {
          chain.push_back(from + parent[cur].second);
          chain.push_back(from + parent[cur].first);
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      const int y = r.locs[from + e].level;
      if (y % 2 != 0) continue;
      for (int f = e + 1; f < n && r.locs[from + f].level == y; ++f)
        if (parent[f].first == -2) parent[f] = {s, e};
    }
  }
  return std::nullopt;
}

}  // namespace

Word zone_output_by_pos(const Run& r, int from, int to, int lo, int hi) {
  return induced_output(r, [&](int i) { return from <= i && i <= to && lo <= r.locs[i].pos && r.locs[i].pos <= hi; });
}

std::optional<std::vector<int>> diagonal_witnesses(const Run& r, int from, int to, long b, Mode mode, int height) {
  if (from < 0 || to >= r.size() || from > to || r.locs[from].pos > r.locs[to].pos) return std::nullopt;
  if (mode == Mode::General) return general_diagonal(r, from, to, b);
  return sweeping_diagonal(r, from, to, 2L * run_height(r, height) * b);
}

std::optional<DecompositionPiece> block_evidence(const Run& r, int from, int to, long b, Mode mode, int height) {
  if (from < 0 || to >= r.size() || from > to) return std::nullopt;
  const Location l = r.locs[from], l2 = r.locs[to];
  if (l.pos > l2.pos) return std::nullopt;
  DecompositionPiece p;
  p.kind = PieceKind::Block;
  p.from = from;
  p.to = to;
  const long period_bound = mode == Mode::General ? b : 2 * b;
  p.periodic = almost_periodic_decompose(range_output(r, from, to), static_cast<int>(period_bound));
  if (!p.periodic) return std::nullopt;
  if (mode == Mode::General) {
    p.left = zone_output_by_pos(r, from, to, 0, l.pos);
    p.right = zone_output_by_pos(r, from, to, l2.pos, r.omega());
    if (static_cast<long>(p.left.size()) > b || static_cast<long>(p.right.size()) > b) return std::nullopt;
  } else {
    const int ylo = std::min(l.level, l2.level), yhi = std::max(l.level, l2.level);
    p.left = induced_output(r, [&](int i) {
      const Location& q = r.locs[i];
      bool inside = l.pos <= q.pos && q.pos <= l2.pos && ylo <= q.level && q.level <= yhi;
      return from <= i && i <= to && !inside;
    });
    if (static_cast<long>(p.left.size()) > 2L * run_height(r, height) * b) return std::nullopt;
  }
  return p;
}

std::optional<Decomposition> find_decomposition(const Run& r, long b, Mode mode, int height) {
  Decomposition d;
  d.mode = mode;
  d.bound = b;
  const int last = r.size() - 1;
  int cursor = 0;
  auto add_diagonal = [&](int from, int to) {
    if (from >= to) return true;
    auto w = diagonal_witnesses(r, from, to, b, mode, height);
    if (!w) return false;
    DecompositionPiece p;
    p.kind = PieceKind::Diagonal;
    p.from = from;
    p.to = to;
    p.witnesses = std::move(*w);
    d.pieces.push_back(std::move(p));
    return true;
  };
  for (const auto& c : sim_classes(r, mode)) {
    if (c.block_first < cursor) return std::nullopt;  // extended blocks overlap
    if (!add_diagonal(cursor, c.block_first)) return std::nullopt;
    auto p = block_evidence(r, c.block_first, c.block_last, b, mode, height);
    if (!p) return std::nullopt;
    d.pieces.push_back(std::move(*p));
    cursor = c.block_last;
  }
  if (!add_diagonal(cursor, last)) return std::nullopt;
  if (d.pieces.empty()) {
    // a single-location run is a trivial diagonal
    DecompositionPiece p;
    p.witnesses = {0};
    d.pieces.push_back(p);
  }
  if (!verify_decomposition(r, d, b, mode, height)) return std::nullopt;
  return d;
}

bool verify_decomposition(const Run& r, const Decomposition& d, long b, Mode mode, int height) {
  if (d.pieces.empty() || d.mode != mode) return false;
  int cursor = 0;
  for (const auto& p : d.pieces) {
    if (p.from != cursor || p.to < p.from || p.to >= r.size()) return false;
    if (r.locs[p.from].pos > r.locs[p.to].pos) return false;
    if (p.kind == PieceKind::Diagonal) {
      if (!diagonal_witnesses(r, p.from, p.to, b, mode, height)) return false;
    } else {
      auto e = block_evidence(r, p.from, p.to, b, mode, height);
      if (!e) return false;
      if (p.periodic) {
        const auto& [w0, w1, w2] = *p.periodic;
        Word all = w0;
        all.insert(all.end(), w1.begin(), w1.end());
        all.insert(all.end(), w2.begin(), w2.end());
        long pb = mode == Mode::General ? b : 2 * b;
        if (all != range_output(r, p.from, p.to) || static_cast<long>(w0.size()) > pb ||
            static_cast<long>(w2.size()) > pb || minimal_period(w1) > pb)
          return false;
      }
    }
    cursor = p.to;
  }
  return cursor == r.size() - 1;
}

}  // namespace twoway
