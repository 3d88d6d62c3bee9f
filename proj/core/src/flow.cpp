#include "twoway/flow.hpp"

#include <algorithm>
#include <bit>
#include <fmt/format.h>
#include <optional>
#include <stdexcept>

namespace twoway {

std::string_view factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::LL: return "LL";
    case FactorKind::LR: return "LR";
    case FactorKind::RL: return "RL";
    case FactorKind::RR: return "RR";
  }
  return "?";
}

namespace {

Rel& rel_of(Flow& f, FactorKind k) {
  switch (k) {
    case FactorKind::LL: return f.ll;
    case FactorKind::LR: return f.lr;
    case FactorKind::RL: return f.rl;
    default: return f.rr;
  }
}

const Rel& rel_of(const Flow& f, FactorKind k) { return rel_of(const_cast<Flow&>(f), k); }

Rel resized(const Rel& a, int n) {
  Rel r = a;
  r.resize(n, 0);
  return r;
}

// Source and target constraints of each kind, as (parity, height) pairs.
struct Shape {
  int src_parity;
  bool src_left;
  int dst_parity;
  bool dst_left;
};

constexpr Shape shape(FactorKind k) {
  switch (k) {
    case FactorKind::LL: return {0, true, 1, true};
    case FactorKind::LR: return {0, true, 0, false};
    case FactorKind::RL: return {1, false, 1, true};
    default: return {1, false, 0, false};
  }
}

constexpr FactorKind kAllKinds[] = {FactorKind::LL, FactorKind::LR, FactorKind::RL, FactorKind::RR};

}  // namespace

Rel rel_compose(const Rel& a, const Rel& b) {
  Rel c(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (std::uint64_t m = a[i]; m; m &= m - 1) {
      int j = std::countr_zero(m);
      if (j < static_cast<int>(b.size())) c[i] |= b[j];
    }
  return c;
}

Rel rel_union(const Rel& a, const Rel& b) {
  Rel c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] |= a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] |= b[i];
  return c;
}

Rel rel_star(const Rel& a) {
  Rel s(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) s[i] = std::uint64_t{1} << i;
  while (true) {
    Rel next = rel_union(s, rel_compose(s, a));
    if (next == s) return s;
    s = std::move(next);
  }
}

Flow Flow::make(int h1, int h2) {
  if (h1 < 0 || h2 < 0 || std::max(h1, h2) > 64)
    throw std::invalid_argument(fmt::format("flow heights ({}, {}) out of range", h1, h2));
  Flow f;
  f.h1 = h1;
  f.h2 = h2;
  int n = f.nodes();
  f.ll = f.lr = f.rl = f.rr = Rel(n, 0);
  return f;
}

Flow Flow::bot() {
  Flow f;
  f.bottom = true;
  return f;
}

void Flow::add(FactorKind k, int from, int to) {
  if (from < 0 || to < 0 || from >= nodes() || to >= nodes())
    throw std::invalid_argument(fmt::format("flow edge {}->{} outside {} nodes", from, to, nodes()));
  rel_of(*this, k)[from] |= std::uint64_t{1} << to;
}

bool Flow::has(FactorKind k, int from, int to) const {
  const Rel& r = rel_of(*this, k);
  return from >= 0 && from < static_cast<int>(r.size()) && to >= 0 && to < 64 && ((r[from] >> to) & 1);
}

Rel Flow::edges() const { return rel_union(rel_union(ll, lr), rel_union(rl, rr)); }

bool Flow::operator==(const Flow& o) const {
  if (bottom || o.bottom) return bottom == o.bottom;
  return h1 == o.h1 && h2 == o.h2 && ll == o.ll && lr == o.lr && rl == o.rl && rr == o.rr;
}

bool well_formed(const Flow& f) {
  if (f.bottom) return true;
  int n = f.nodes();
  if (n > 64) return false;
  for (FactorKind k : kAllKinds)
    if (static_cast<int>(rel_of(f, k).size()) != n) return false;
  std::vector<int> outdeg(n, 0), indeg(n, 0);
  for (FactorKind k : kAllKinds) {
    Shape s = shape(k);
    const Rel& r = rel_of(f, k);
    for (int i = 0; i < n; ++i)
      for (std::uint64_t m = r[i]; m; m &= m - 1) {
        int j = std::countr_zero(m);
        if (j >= n) return false;
        if (i % 2 != s.src_parity || i >= (s.src_left ? f.h1 : f.h2)) return false;
        if (j % 2 != s.dst_parity || j >= (s.dst_left ? f.h1 : f.h2)) return false;
        ++outdeg[i];
        ++indeg[j];
      }
  }
  for (int i = 0; i < n; ++i)
    if (outdeg[i] > 1 || indeg[i] > 1) return false;
  return true;
}

Flow flow_product(const Flow& f, const Flow& g) {
  if (f.bottom || g.bottom || f.h2 != g.h1) return Flow::bot();
  int n = std::max({f.nodes(), g.nodes()});
  auto F = [&](const Rel& r) { return resized(r, n); };
  Rel fll = F(f.ll), flr = F(f.lr), frl = F(f.rl), frr = F(f.rr);
  Rel gll = F(g.ll), glr = F(g.lr), grl = F(g.rl), grr = F(g.rr);
  Rel loop_r = rel_star(rel_compose(gll, frr));  // bouncing in the middle, heading right
  Rel loop_l = rel_star(rel_compose(frr, gll));  // bouncing in the middle, heading left

  Flow p = Flow::make(f.h1, g.h2);
  int m = p.nodes();
  auto cut = [&](const Rel& r) {
    for (int i = m; i < n; ++i)
      if (r[i]) return std::optional<Rel>{};
    Rel c = resized(r, m);
    for (auto row : c)
      if (m < 64 && (row >> m)) return std::optional<Rel>{};
    return std::optional<Rel>{c};
  };
  auto lr = cut(rel_compose(rel_compose(flr, loop_r), glr));
  auto rl = cut(rel_compose(rel_compose(grl, loop_l), frl));
  auto ll = cut(rel_union(fll, rel_compose(rel_compose(rel_compose(flr, loop_r), gll), frl)));
  auto rr = cut(rel_union(grr, rel_compose(rel_compose(rel_compose(grl, loop_l), frr), glr)));
  if (!lr || !rl || !ll || !rr) return Flow::bot();
  p.lr = *lr;
  p.rl = *rl;
  p.ll = *ll;
  p.rr = *rr;
  if (!well_formed(p)) return Flow::bot();
  return p;
}

std::string format_flow(const Flow& f) {
  if (f.bottom) return "bottom";
  std::string s = fmt::format("h=({},{})", f.h1, f.h2);
  for (FactorKind k : kAllKinds) {
    s += fmt::format(" {}:", factor_kind_name(k));
    const Rel& r = rel_of(f, k);
    bool any = false;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      for (std::uint64_t m = r[i]; m; m &= m - 1) {
        s += fmt::format(" {}->{}", i, std::countr_zero(m));
        any = true;
      }
    if (!any) s += " -";
  }
  return s;
}

Effect Effect::bot() {
  Effect e;
  e.bottom = true;
  e.flow = Flow::bot();
  return e;
}

bool Effect::operator==(const Effect& o) const {
  if (bottom || o.bottom) return bottom == o.bottom;
  return flow == o.flow && c1 == o.c1 && c2 == o.c2;
}

Effect effect_product(const Effect& e, const Effect& g) {
  if (e.bottom || g.bottom || e.c2 != g.c1) return Effect::bot();
  Flow p = flow_product(e.flow, g.flow);
  if (p.bottom) return Effect::bot();
  return Effect{false, std::move(p), e.c1, g.c2};
}

std::uint64_t effect_hash(const Effect& e) {
  // FNV-1a over a canonical serialization
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  if (e.bottom) {
    mix(~0ull);
    return h;
  }
  mix(e.c1.size());
  for (auto q : e.c1) mix(q);
  mix(e.c2.size());
  for (auto q : e.c2) mix(q);
  for (const Rel* r : {&e.flow.ll, &e.flow.lr, &e.flow.rl, &e.flow.rr}) {
    mix(r->size());
    for (auto row : *r) mix(row);
  }
  return h;
}

std::string format_effect(const Effect& e) {
  if (e.bottom) return "bottom";
  auto cs = [](const CrossingSequence& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  };
  return fmt::format("{} c1={} c2={}", format_flow(e.flow), cs(e.c1), cs(e.c2));
}

std::vector<InterceptedFactor> intercepted_factors(const Run& r, int x1, int x2) {
  if (x1 < 0 || x2 > r.omega() || x1 > x2)
    throw std::invalid_argument(fmt::format("interval [{},{}] outside the run", x1, x2));
  std::vector<InterceptedFactor> out;
  auto inside = [&](int i) {
    int j = letter_read(r.locs[i]);
    return x1 + 1 <= j && j <= x2;
  };
  int i = 0;
  while (i < r.steps()) {
    if (!inside(i)) {
      ++i;
      continue;
    }
    int start = i;
    while (i < r.steps() && inside(i)) ++i;
    // steps start..i-1 are inside, so locations start..i form the factor
    const Location a = r.locs[start], b = r.locs[i];
    bool from_left = a.pos == x1 && a.level % 2 == 0;
    bool to_left = b.pos == x1 && b.level % 2 == 1;
    FactorKind k = from_left ? (to_left ? FactorKind::LL : FactorKind::LR)
                             : (to_left ? FactorKind::RL : FactorKind::RR);
    out.push_back({k, start, i, a.level, b.level});
  }
  return out;
}

Flow flow_of_interval(const Run& r, int x1, int x2) {
  RunIndex idx(r);
  Flow f = Flow::make(idx.height(x1), idx.height(x2));
  for (const auto& fac : intercepted_factors(r, x1, x2)) f.add(fac.kind, fac.from, fac.to);
  return f;
}

Effect effect_of_interval(const Run& r, int x1, int x2) {
  Effect e;
  e.flow = flow_of_interval(r, x1, x2);
  e.c1 = crossing_sequence(r, x1);
  e.c2 = crossing_sequence(r, x2);
  return e;
}

}  // namespace twoway
