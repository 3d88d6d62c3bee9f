#include "twoway/definability.hpp"

#include <fmt/format.h>

#include "twoway/checks.hpp"
#include "twoway/decomposition.hpp"

namespace twoway {

Verdict check_definable(const Transducer& t, const DefinabilityOptions& opt) {
  if (opt.bound < 1) throw std::invalid_argument("check_definable: bound must be positive");
  if (opt.maxlen < 0) throw std::invalid_argument("check_definable: maxlen must be non-negative");
  auto fv = check_functional(t, opt.maxlen);
  if (!fv.functional())
    return Inconclusive{"functionality",
                        fmt::format("two outputs on '{}'", format_word(t.input, fv.counterexample->input))};
  const auto words = all_words(t, opt.maxlen);
  std::vector<std::pair<Word, std::vector<Run>>> runs;
  for (const auto& u : words) runs.emplace_back(u, enumerate_runs(t, u).runs);
  // divisibility is bound independent, so it is a sound refutation
  for (const auto& [u, rs] : runs)
    for (const auto& r : rs)
      if (auto v = check_p2(r, 0, opt.mode)) {
        NotDefinable w{u, r, *v};
        if (verify_not_definable(t, w)) return w;
        return Inconclusive{"refutation", fmt::format("violation on '{}' did not re-verify", format_word(t.input, u))};
      }
  const int height = opt.mode == Mode::Sweeping ? max_height(t.num_states()) : 0;
  for (const auto& [u, rs] : runs)
    for (const auto& r : rs)
      if (!find_decomposition(r, opt.bound, opt.mode, height))
        return Inconclusive{"decomposition",
                            fmt::format("no {}-decomposition of a run on '{}'", opt.bound, format_word(t.input, u))};
  Transducer one;
  try {
    OnewayOptions o;
    o.bound = opt.bound;
    o.state_budget = opt.state_budget;
    one = construct_oneway(t, o);
  } catch (const ResourceError& e) {
    return Inconclusive{"construction", e.what()};
  }
  if (auto cex = equiv_bounded(t, one, opt.maxlen)) {
    std::string in;
    for (const auto& s : cex->input) in += (in.empty() ? "" : " ") + s;
    return Inconclusive{"equivalence", fmt::format("T and T' differ on '{}'", in)};
  }
  return ConsistentUpTo{opt.maxlen, opt.bound, one.num_states(), static_cast<int>(one.transitions.size())};
}

bool verify_not_definable(const Transducer& t, const NotDefinable& w) {
  if (w.run.input != full_input(w.input) || !w.run.accepts) return false;
  if (!check_run(t, w.run).empty()) return false;
  return w.violation.divisibility && verify_violation(w.run, w.violation, 0);
}

std::string verdict_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "NotDefinable";
    case 1: return "ConsistentUpTo";
    default: return "Inconclusive";
  }
}

}  // namespace twoway
