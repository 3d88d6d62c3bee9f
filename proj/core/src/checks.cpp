#include "twoway/checks.hpp"

#include <algorithm>

namespace twoway {

namespace {

std::vector<std::vector<int>> words_over(int k, int maxlen) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::vector<int>> next;
    next.reserve(layer.size() * k);
    for (const auto& w : layer)
      for (int s = 0; s < k; ++s) {
        auto v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Word> all_words(const Transducer& t, int maxlen) {
  auto ws = words_over(t.num_input() - 2, maxlen);
  for (auto& w : ws)
    for (auto& s : w) s += 2;
  return ws;
}

std::set<Word> outputs_on(const Transducer& t, const Word& u) {
  std::set<Word> result;
  if (t.kind != Kind::OneWay) {
    for (const auto& r : enumerate_runs(t, u).runs) result.insert(output_of(r));
    return result;
  }
  Word in = full_input(u);
  std::set<std::pair<StateId, Word>> cur;
  for (StateId q : t.initial) cur.emplace(q, Word{});
  for (Symbol a : in) {
    std::set<std::pair<StateId, Word>> next;
    for (const auto& [q, w] : cur)
      for (int tid : t.outgoing(q, a)) {
        const Transition& tr = t.transitions[tid];
        Word v = w;
        v.insert(v.end(), tr.out.begin(), tr.out.end());
        next.emplace(tr.dst, std::move(v));
      }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  for (const auto& [q, w] : cur)
    if (t.is_final(q)) result.insert(w);
  return result;
}

FunctionalVerdict check_functional(const Transducer& t, int maxlen) {
  FunctionalVerdict v;
  v.maxlen = maxlen;
  for (const auto& u : all_words(t, maxlen)) {
    auto rs = enumerate_runs(t, u).runs;
    for (size_t i = 1; i < rs.size(); ++i) {
      if (output_of(rs[i]) != output_of(rs[0])) {
        v.counterexample = FunctionalityCounterexample{u, rs[0], rs[i]};
        return v;
      }
    }
  }
  return v;
}

std::optional<EquivCounterexample> equiv_bounded(const Transducer& t1, const Transducer& t2, int maxlen) {
  std::vector<std::string> names(t1.input.begin() + 2, t1.input.end());
  for (size_t i = 2; i < t2.input.size(); ++i)
    if (std::find(names.begin(), names.end(), t2.input[i]) == names.end()) names.push_back(t2.input[i]);

  auto render = [](const Transducer& t, const Word& w) {
    std::vector<std::string> v;
    for (Symbol s : w) v.push_back(t.output[s]);
    return v;
  };
  auto outputs = [&](const Transducer& t, const std::vector<int>& word) {
    std::set<std::vector<std::string>> res;
    Word u;
    for (int s : word) {
      int k = t.input_index(names[s]);
      if (k < 0) return res;
      u.push_back(k);
    }
    for (const auto& w : outputs_on(t, u)) res.insert(render(t, w));
    return res;
  };

  for (const auto& word : words_over(static_cast<int>(names.size()), maxlen)) {
    auto o1 = outputs(t1, word), o2 = outputs(t2, word);
    if (o1 == o2) continue;
    EquivCounterexample c;
    for (int s : word) c.input.push_back(names[s]);
    if (!o1.empty()) c.out1 = *o1.begin();
    if (!o2.empty()) c.out2 = *o2.begin();
    return c;
  }
  return std::nullopt;
}

}  // namespace twoway
