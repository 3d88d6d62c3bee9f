#include "twoway/oneway.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include <fmt/format.h>

namespace twoway {

namespace {

// Labels of locations in block mode: before the block, inside, after it.
enum Lab : int { E = 0, B = 1, P = 2 };

// Tags give the index of the next output symbol inside a block:
// r < |w1| in zone 1, (index - |w1|) mod p in zone 2, distance to the end in zone 3.
constexpr int kZone2 = 1000, kZone3 = 2000;

struct Block {
  int l1 = 0, p = 1, l3 = 0;
  Word w1, v, w3;      // partial words, -1 is unknown
  bool past = false;   // count has passed w1
  int n = 0;           // count if !past, else (count - l1) mod p
  bool sat = true;     // remaining count is > l3 (unknown) or exactly m
  int m = 0;
};

struct St {
  bool start = false;  // before reading the left endmarker
  std::vector<int> cs;
  bool block = false;
  int cut = 0;
  std::vector<int> lab, tag;  // block mode only
  std::vector<std::optional<Word>> words;  // gap y is (z,y) -> (z,y+1)
  Block bk;
};

std::vector<int> encode(const St& s) {
  std::vector<int> k;
  auto put = [&](const Word& w) {
    k.push_back(static_cast<int>(w.size()));
    k.insert(k.end(), w.begin(), w.end());
  };
  put(s.cs);
  k.push_back(s.start ? 1 : 0);
  k.push_back(s.block ? 1 : 0);
  for (const auto& w : s.words) {
    if (w) put(*w);
    else k.push_back(-1);
  }
  if (!s.block) {
    k.push_back(s.cut);
    return k;
  }
  k.insert(k.end(), s.lab.begin(), s.lab.end());
  k.insert(k.end(), s.tag.begin(), s.tag.end());
  const Block& b = s.bk;
  k.insert(k.end(), {b.l1, b.p, b.l3, b.past ? 1 : 0, b.n, b.sat ? 1 : 0, b.m});
  put(b.w1);
  put(b.v);
  put(b.w3);
  return k;
}

struct WLoc {
  int side = 0;  // 0: position z, 1: position z+1
  int level = 0;
};

enum EvKind { Local = 0, LeftGap = 1, RightGap = 2 };

struct WEv {
  EvKind kind = Local;
  int tid = -1;
};

struct Walk {
  std::vector<WLoc> locs;
  std::vector<WEv> evs;  // evs[k] goes from locs[k] to locs[k+1]
  std::vector<int> cs2;
};

// All ways the run can interleave between z and z+1 while reading letter a.
struct Walker {
  const Transducer& t;
  const std::vector<int>& cs;
  Symbol a;
  int H;
  const std::vector<char>& enter_left;  // states some left move leads to
  std::vector<Walk>& out;
  Walk w;
  int iz = 1;

  bool fresh(int q, int level) const {
    for (size_t l = level % 2; l < w.cs2.size(); l += 2)
      if (w.cs2[l] == q) return false;
    return true;
  }
  void move(EvKind k, int tid, WLoc to) {
    w.evs.push_back({k, tid});
    w.locs.push_back(to);
    go();
    w.locs.pop_back();
    w.evs.pop_back();
  }
  void go() {
    const WLoc cur = w.locs.back();
    const int hz = static_cast<int>(cs.size());
    const int L = static_cast<int>(w.cs2.size());
    if (cur.side == 0) {
      if (cur.level % 2 == 1) {
        if (iz != cur.level + 1 || iz >= hz) return;
        ++iz;
        move(LeftGap, -1, {0, cur.level + 1});
        --iz;
        return;
      }
      for (int id : t.outgoing(cs[cur.level], a)) {
        const auto& tr = t.transitions[id];
        if (tr.dir == Dir::Right) {
          if (L % 2 != 0 || L >= H || !fresh(tr.dst, L)) continue;
          w.cs2.push_back(tr.dst);
          move(Local, id, {1, L});
          w.cs2.pop_back();
        } else {
          if (iz != cur.level + 1 || iz >= hz || cs[iz] != tr.dst) continue;
          ++iz;
          move(Local, id, {0, iz - 1});
          --iz;
        }
      }
      return;
    }
    if (cur.level % 2 == 0) {
      if (iz == hz && (a != kRightEnd || cur.level == 0)) out.push_back(w);
      if (a == kRightEnd || L >= H) return;
      for (int q = 0; q < t.num_states(); ++q) {
        if (!enter_left[q] || !fresh(q, L)) continue;
        w.cs2.push_back(q);
        move(RightGap, -1, {1, L});
        w.cs2.pop_back();
      }
      return;
    }
    for (int id : t.outgoing(w.cs2[cur.level], a)) {
      const auto& tr = t.transitions[id];
      if (tr.dir == Dir::Left) {
        if (iz % 2 != 1 || iz >= hz || cs[iz] != tr.dst) continue;
        ++iz;
        move(Local, id, {0, iz - 1});
        --iz;
      } else {
        if (L >= H || !fresh(tr.dst, L)) continue;
        w.cs2.push_back(tr.dst);
        move(Local, id, {1, L});
        w.cs2.pop_back();
      }
    }
  }
};

struct Ctx {
  const Word* ev = nullptr;  // guessed word of the E right gap being checked
  size_t ep = 0;
  bool pon = false;  // composing a P left gap at z+1
  int pgap = -1;
  Word pacc;
  std::vector<std::optional<Word>> w2;
  int eused = 0, pused = 0;
  Word emit;
  Block bk;
  int tag = -1;
  std::vector<int> tag2;
};

using Succ = std::pair<std::optional<St>, Word>;  // nullopt state means accept

class Builder {
 public:
  Builder(const Transducer& t, const OnewayOptions& o)
      : t_(t), b_(static_cast<int>(o.bound)), cap_(o.word_cap > 0 ? o.word_cap : static_cast<int>(o.bound)),
        H_(2 * t.num_states() - 1), gamma_(static_cast<int>(t.output.size())), enter_left_(t.num_states(), 0) {
    for (const auto& tr : t.transitions)
      if (tr.dir == Dir::Left) enter_left_[tr.dst] = 1;
    for (int len = 0; len <= cap_; ++len) {
      Word w(len, 0);
      for (;;) {
        words_by_len_.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == gamma_ - 1) w[i--] = 0;
        if (i < 0 || gamma_ == 0) break;
        ++w[i];
      }
      if (gamma_ == 0) break;
    }
  }

  // Crossing-sequence steps (cs, a, cs2) that occur on some successful run
  // of t: forward reachable from the start and co-reachable to acceptance.
  // Guessing only these keeps T' from exploring runs that cannot succeed.
  void trim_steps(long budget) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> css;
    std::vector<std::vector<std::pair<Symbol, int>>> next;
    std::vector<char> accepts;
    auto intern = [&](const std::vector<int>& cs) {
      auto [it, fresh] = ids.emplace(cs, static_cast<int>(css.size()));
      if (fresh) {
        if (static_cast<long>(css.size()) >= budget)
          throw ResourceError(fmt::format("construct_oneway: state budget of {} states exceeded", budget));
        css.push_back(cs);
        next.emplace_back();
        accepts.push_back(0);
      }
      return it->second;
    };
    // start states carry a marker so they only read the left endmarker
    for (StateId q0 : t_.initial) intern({-1, q0});
    for (size_t i = 0; i < css.size(); ++i) {
      const bool start = css[i][0] == -1;
      const std::vector<int> cs(css[i].begin() + (start ? 1 : 0), css[i].end());
      for (Symbol a = 0; a < t_.num_input(); ++a) {
        if ((a == kLeftEnd) != start) continue;
        std::vector<Walk> walks;
        Walker wk{t_, cs, a, H_, enter_left_, walks, {}, 1};
        wk.w.locs.push_back({0, 0});
        wk.go();
        for (const auto& w : walks) {
          if (a == kRightEnd) {
            if (w.cs2.size() == 1 && t_.is_final(w.cs2[0])) accepts[i] = 1;
            continue;
          }
          const int j = intern(w.cs2);  // may grow next
          next[i].emplace_back(a, j);
        }
      }
    }
    std::vector<char> live(accepts);
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t i = 0; i < css.size(); ++i)
        if (!live[i])
          for (auto [a, j] : next[i])
            if (live[j]) {
              live[i] = changed = true;
              break;
            }
    }
    for (size_t i = 0; i < css.size(); ++i) {
      if (!live[i]) continue;
      const bool start = css[i][0] == -1;
      std::vector<int> cs(css[i].begin() + (start ? 1 : 0), css[i].end());
      for (auto [a, j] : next[i])
        if (live[j]) steps_.insert({cs, a, css[j]});
    }
  }

  std::vector<Succ> successors(const St& s, Symbol a) {
    std::vector<Walk> walks;
    Walker wk{t_, s.cs, a, H_, enter_left_, walks, {}, 1};
    wk.w.locs.push_back({0, 0});
    wk.go();
    out_.clear();
    for (const auto& w : walks)
      if (a == kRightEnd || steps_.count({s.cs, a, w.cs2})) expand(s, a, w);
    return std::move(out_);
  }

 private:
  struct Option {
    int s = 0, e = 0;
    bool block = false, starts = false, ends = false;  // kind of the middle region
    bool diag_after = true;
  };

  const Transducer& t_;
  int b_, cap_, H_, gamma_;
  std::vector<char> enter_left_;
  std::set<std::tuple<std::vector<int>, Symbol, std::vector<int>>> steps_;
  std::vector<Word> words_by_len_;  // all words up to length cap, by length
  std::vector<Succ> out_;

  // per walk
  const St* s_ = nullptr;
  const Walk* w_ = nullptr;
  Option op_;
  Symbol a_ = 0;

  void expand(const St& s, Symbol a, const Walk& w) {
    s_ = &s;
    w_ = &w;
    a_ = a;
    const int m = static_cast<int>(w.locs.size()) - 1;
    std::vector<int> zidx(s.cs.size(), -1);
    for (int k = 0; k <= m; ++k)
      if (w.locs[k].side == 0) zidx[w.locs[k].level] = k;
    auto zside_ok = [&](int st, int en) {
      for (size_t y = 0; y < s.cs.size(); ++y) {
        int k = zidx[y];
        int lab = k < st ? E : (k < en ? B : P);
        if (lab != s.lab[y]) return false;
      }
      return true;
    };
    std::vector<int> ends_z1;  // candidate cut locations at z+1
    for (int k = 0; k <= m; ++k)
      if (w.locs[k].side == 1) ends_z1.push_back(k);
    const bool last = a == kRightEnd;

    if (!s.block) {
      const int st = zidx[s.cut];
      for (int en : ends_z1) {
        if (en <= st) continue;
        if (last && w.locs[en].level != 0) continue;
        run_option({st, en, false, false, false, true});
        run_option({st, en, true, true, true, true});
      }
      if (!last) {
        run_option({st, m + 1, true, true, false, false});
        for (int en = st + 2; en <= m; ++en)
          if (w.evs[en - 1].kind == RightGap) run_option({st, en, true, true, false, false});
      }
      return;
    }
    for (int st = 0; st <= m; ++st) {
      if (w.locs[st].side != 0) continue;
      if (st > 0 && w.evs[st - 1].kind != LeftGap) continue;
      for (int en : ends_z1) {
        if (en <= st || !zside_ok(st, en)) continue;
        if (last && w.locs[en].level != 0) continue;
        run_option({st, en, true, false, true, true});
      }
      if (last) continue;
      if (zside_ok(st, m + 1)) run_option({st, m + 1, true, false, false, false});
      for (int en = st + 2; en <= m; ++en)
        if (w.evs[en - 1].kind == RightGap && zside_ok(st, en)) run_option({st, en, true, false, false, false});
    }
  }

  void run_option(const Option& o) {
    op_ = o;
    Ctx c;
    c.w2.assign(w_->cs2.size() - 1, std::nullopt);
    c.tag2.assign(w_->cs2.size(), -1);
    if (!o.block) {
      event(0, std::move(c));
      return;
    }
    if (!o.starts) {
      c.bk = s_->bk;
      c.tag = s_->tag[w_->locs[o.s].level];
      if (c.tag < 0) return;
      event(0, std::move(c));
      return;
    }
    for (int l1 = 0; l1 <= b_; ++l1)
      for (int p = 1; p <= b_; ++p)
        for (int l3 = 0; l3 <= b_; ++l3) {
          Ctx d = c;
          Block& bk = d.bk;
          bk.l1 = l1;
          bk.p = p;
          bk.l3 = l3;
          bk.w1.assign(l1, -1);
          bk.v.assign(p, -1);
          bk.w3.assign(l3, -1);
          bk.past = l1 == 0;
          if (l1 > 0) {
            d.tag = 0;
            event(0, d);
          } else {
            d.tag = kZone2;
            event(0, d);
            d.tag = kZone3 + l3;
            event(0, std::move(d));
          }
        }
  }

  // --- block helpers -------------------------------------------------------

  static bool fix(Word& w, int i, Symbol s) {
    if (w[i] < 0) w[i] = s;
    return w[i] == s;
  }

  // Moves the tag past one output symbol s.
  template <class F>
  void advance_tag(Ctx c, Symbol s, F&& k) {
    Block& bk = c.bk;
    const int zone = c.tag / 1000, v = c.tag % 1000;
    if (zone == 0) {
      if (!fix(bk.w1, v, s)) return;
      if (v + 1 < bk.l1) {
        c.tag = v + 1;
        k(std::move(c));
        return;
      }
    } else if (zone == 1) {
      if (!fix(bk.v, v, s)) return;
      Ctx d = c;
      d.tag = kZone2 + (v + 1) % bk.p;
      k(std::move(d));
    } else {
      if (v < 1 || !fix(bk.w3, bk.l3 - v, s)) return;
      c.tag = kZone3 + v - 1;
      k(std::move(c));
      return;
    }
    if (zone == 0) {
      Ctx d = c;
      d.tag = kZone2;
      k(std::move(d));
    }
    c.tag = kZone3 + bk.l3;
    k(std::move(c));
  }

  template <class F>
  void emit_from(Ctx c, Word Block::*pw, int i, F&& k) {
    Word& w = c.bk.*pw;
    if (w[i] >= 0) {
      c.emit.push_back(w[i]);
      k(std::move(c));
      return;
    }
    for (Symbol s = 0; s < gamma_; ++s) {
      Ctx d = c;
      (d.bk.*pw)[i] = s;
      d.emit.push_back(s);
      k(std::move(d));
    }
  }

  // Emits the next symbol of the block output by count.
  template <class F>
  void count_one(Ctx c, F&& k) {
    Block& bk = c.bk;
    if (!bk.sat) {
      if (bk.m == 0 || !bk.past) return;
      int i = bk.l3 - bk.m;
      --bk.m;
      emit_from(std::move(c), &Block::w3, i, k);
      return;
    }
    {
      Ctx d = c;
      d.bk.sat = false;
      d.bk.m = d.bk.l3;
      count_one(std::move(d), k);
    }
    if (!bk.past) {
      int i = bk.n++;
      if (bk.n == bk.l1) {
        bk.past = true;
        bk.n = 0;
      }
      emit_from(std::move(c), &Block::w1, i, k);
    } else {
      int i = bk.n;
      bk.n = (bk.n + 1) % bk.p;
      emit_from(std::move(c), &Block::v, i, k);
    }
  }

  // Feeds w[i..] through tag check and counted emission, then continues.
  void feed(const Word& w, size_t i, Ctx c, const std::function<void(Ctx)>& k) {
    if (i == w.size()) {
      k(std::move(c));
      return;
    }
    advance_tag(std::move(c), w[i], [&](Ctx d) { count_one(std::move(d), [&](Ctx e) { feed(w, i + 1, std::move(e), k); }); });
  }

  std::vector<int> all_tags(const Block& bk) const {
    std::vector<int> v;
    for (int r = 0; r < bk.l1; ++r) v.push_back(r);
    for (int r = 0; r < bk.p; ++r) v.push_back(kZone2 + r);
    for (int d = 0; d <= bk.l3; ++d) v.push_back(kZone3 + d);
    return v;
  }

  // --- event walk ----------------------------------------------------------

  const Word& tout(int tid) const { return t_.transitions[tid].out; }

  void event(int k, Ctx c) {
    const Walk& w = *w_;
    const int m = static_cast<int>(w.locs.size()) - 1;
    if (k == m) {
      finish(std::move(c));
      return;
    }
    const WLoc from = w.locs[k], to = w.locs[k + 1];
    const WEv& ev = w.evs[k];
    const St& s = *s_;
    if (k < op_.s) {
      // before the middle: re-check guessed outputs of right gaps at z
      if (ev.kind == Local && from.side == 0 && from.level % 2 == 0) {
        const auto& g = s.words[from.level];
        if (!g) return;
        c.ev = &*g;
        c.ep = 0;
      }
      if (ev.kind == LeftGap) {
        event(k + 1, std::move(c));
        return;
      }
      if (!c.ev) return;
      if (ev.kind == Local) {
        const Word& o = tout(ev.tid);
        if (c.ep + o.size() > c.ev->size() || !std::equal(o.begin(), o.end(), c.ev->begin() + c.ep)) return;
        c.ep += o.size();
        if (to.side == 0) {
          if (c.ep != c.ev->size()) return;
          c.ev = nullptr;
        }
        event(k + 1, std::move(c));
        return;
      }
      for (size_t len = 0; c.ep + len <= c.ev->size() && c.eused + static_cast<int>(len) <= cap_; ++len) {
        Ctx d = c;
        d.w2[from.level] = Word(c.ev->begin() + c.ep, c.ev->begin() + c.ep + len);
        d.ep += len;
        d.eused += static_cast<int>(len);
        event(k + 1, std::move(d));
      }
      return;
    }
    if (k >= op_.e) {
      // after the middle: compose outputs of left gaps at z+1
      if (ev.kind == Local && from.side == 1 && from.level % 2 == 1) {
        c.pon = true;
        c.pgap = from.level;
        c.pacc.clear();
      }
      if (ev.kind == RightGap) {
        event(k + 1, std::move(c));
        return;
      }
      if (!c.pon) return;
      if (ev.kind == LeftGap) {
        const auto& g = s.words[from.level];
        if (!g) return;
        c.pacc.insert(c.pacc.end(), g->begin(), g->end());
      } else {
        const Word& o = tout(ev.tid);
        c.pacc.insert(c.pacc.end(), o.begin(), o.end());
        if (to.side == 1) {
          c.pused += static_cast<int>(c.pacc.size());
          if (c.pused > cap_) return;
          c.w2[c.pgap] = c.pacc;
          c.pon = false;
        }
      }
      event(k + 1, std::move(c));
      return;
    }
    if (!op_.block) {
      // diagonal: emit the outputs between the two cuts
      if (ev.kind == Local) {
        const Word& o = tout(ev.tid);
        c.emit.insert(c.emit.end(), o.begin(), o.end());
      } else if (ev.kind == LeftGap) {
        const auto& g = s.words[from.level];
        if (!g) return;
        c.emit.insert(c.emit.end(), g->begin(), g->end());
      } else {
        for (const Word& g : words_by_len_) {
          if (c.eused + static_cast<int>(g.size()) > cap_) break;
          Ctx d = c;
          d.emit.insert(d.emit.end(), g.begin(), g.end());
          d.w2[from.level] = g;
          d.eused += static_cast<int>(g.size());
          event(k + 1, std::move(d));
        }
        return;
      }
      event(k + 1, std::move(c));
      return;
    }
    block_event(k, std::move(c));
  }

  void block_event(int k, Ctx c) {
    const Walk& w = *w_;
    const WLoc from = w.locs[k], to = w.locs[k + 1];
    const WEv& ev = w.evs[k];
    const St& s = *s_;
    auto arrive = [this, k, to](Ctx d) {
      if (op_.ends && k + 1 == op_.e) {
        // the block ends at this location
        if (d.tag != kZone3) return;
        if (d.bk.sat) {
          d.bk.sat = false;
          d.bk.m = d.bk.l3;
        }
        if (d.bk.m != 0) return;
      } else {
        if (to.side == 1) d.tag2[to.level] = d.tag;
        else if (!op_.starts && s_->tag[to.level] != d.tag) return;
      }
      event(k + 1, std::move(d));
    };
    if (ev.kind == Local) {
      feed(tout(ev.tid), 0, std::move(c), arrive);
      return;
    }
    if (ev.kind == LeftGap) {
      if (op_.starts) {
        const auto& g = s.words[from.level];
        if (!g) return;
        feed(*g, 0, std::move(c), arrive);
        return;
      }
      if (s.tag[from.level] != c.tag) return;
      c.tag = s.tag[to.level];
      arrive(std::move(c));
      return;
    }
    c.tag2[from.level] = c.tag;
    if (op_.ends) {
      for (const Word& g : words_by_len_) {
        if (c.eused + static_cast<int>(g.size()) > cap_) break;
        Ctx d = c;
        d.w2[from.level] = g;
        d.eused += static_cast<int>(g.size());
        feed(g, 0, std::move(d), arrive);
      }
      return;
    }
    if (k + 1 == op_.e) {
      event(k + 1, std::move(c));  // the block ends inside this gap
      return;
    }
    for (int tg : all_tags(c.bk)) {
      Ctx d = c;
      d.tag = tg;
      arrive(std::move(d));
    }
  }

  void finish(Ctx c) {
    if (c.ev || c.pon) return;
    const Walk& w = *w_;
    const int h2 = static_cast<int>(w.cs2.size());
    const int m = static_cast<int>(w.locs.size()) - 1;
    St n;
    n.cs = w.cs2;
    n.words.assign(h2 - 1, std::nullopt);
    if (op_.diag_after) {
      n.cut = w.locs[op_.e].level;
      for (int y = 0; y + 1 < h2; ++y) {
        bool need = y % 2 == 0 ? y + 1 <= n.cut : y >= n.cut;
        if (need != c.w2[y].has_value()) return;
        n.words[y] = c.w2[y];
      }
      if (a_ == kRightEnd) {
        if (h2 != 1 || n.cut != 0 || !t_.is_final(n.cs[0])) return;
        out_.emplace_back(std::nullopt, std::move(c.emit));
        return;
      }
      out_.emplace_back(std::move(n), std::move(c.emit));
      return;
    }
    n.block = true;
    n.bk = c.bk;
    n.lab.assign(h2, E);
    n.tag.assign(h2, -1);
    for (int k = 0; k <= m; ++k) {
      if (w.locs[k].side != 1) continue;
      int y = w.locs[k].level;
      n.lab[y] = k < op_.s ? E : (k < op_.e ? B : P);
      if (n.lab[y] == B) {
        if (c.tag2[y] < 0) return;
        n.tag[y] = c.tag2[y];
      }
    }
    for (int y = 0; y + 1 < h2; ++y) {
      bool need = y % 2 == 0 ? n.lab[y + 1] == E : n.lab[y] == P;
      if (need != c.w2[y].has_value()) return;
      n.words[y] = c.w2[y];
    }
    out_.emplace_back(std::move(n), std::move(c.emit));
  }
};

}  // namespace

Transducer construct_oneway(const Transducer& t, const OnewayOptions& opt) {
  if (opt.bound < 1) throw std::invalid_argument("construct_oneway: bound must be positive");
  Builder bld(t, opt);
  bld.trim_steps(opt.state_budget);
  std::map<std::vector<int>, int> ids;
  std::vector<St> states;
  std::deque<int> queue;
  auto intern = [&](St s) {
    auto key = encode(s);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (static_cast<long>(states.size()) >= opt.state_budget)
      throw ResourceError(fmt::format("construct_oneway: state budget of {} states exceeded", opt.state_budget));
    int id = static_cast<int>(states.size());
    ids.emplace(std::move(key), id);
    states.push_back(std::move(s));
    queue.push_back(id);
    return id;
  };
  std::vector<int> init;
  for (StateId q0 : t.initial) {
    St s;
    s.start = true;
    s.cs = {q0};
    init.push_back(intern(std::move(s)));
  }
  const int kAccept = -1;
  struct Edge {
    int src;
    Symbol read;
    Word out;
    int dst;
    bool operator<(const Edge& o) const {
      return std::tie(src, read, out, dst) < std::tie(o.src, o.read, o.out, o.dst);
    }
  };
  std::set<Edge> edges;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < t.num_input(); ++a) {
      if ((a == kLeftEnd) != states[id].start) continue;
      St copy = states[id];
      for (auto& [next, out] : bld.successors(copy, a)) {
        int dst = next ? intern(std::move(*next)) : kAccept;
        edges.insert({id, a, std::move(out), dst});
      }
    }
  }
  if (std::getenv("TWOWAY_ONEWAY_STATS")) {
    long blocks = 0, words = 0;
    for (const auto& s : states) {
      blocks += s.block;
      for (const auto& w : s.words) words += w ? static_cast<long>(w->size()) : 0;
    }
    fmt::print(stderr, "states {} block {} edges {} stored symbols {}\n", states.size(), blocks, edges.size(), words);
  }
  // keep states that reach acceptance
  const int n = static_cast<int>(states.size());
  std::vector<char> live(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : edges)
      if (!live[e.src] && (e.dst == kAccept || live[e.dst])) live[e.src] = changed = true;
  }
  Transducer r;
  r.kind = Kind::OneWay;
  r.input = t.input;
  r.output = t.output;
  std::vector<int> rename(n, -1);
  for (int i = 0; i < n; ++i)
    if (live[i]) {
      rename[i] = r.num_states();
      r.states.push_back(fmt::format("s{}", i));
    }
  const int acc = r.num_states();
  r.states.push_back("acc");
  r.final_states.push_back(acc);
  for (int i : init)
    if (live[i]) r.initial.push_back(rename[i]);
  for (const auto& e : edges) {
    if (!live[e.src] || (e.dst != kAccept && !live[e.dst])) continue;
    r.transitions.push_back({rename[e.src], e.read, e.out, e.dst == kAccept ? acc : rename[e.dst], Dir::Right});
  }
  r.finalize();
  return r;
}

}  // namespace twoway
