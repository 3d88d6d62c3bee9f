#include "twoway_tools/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "twoway/bounds.hpp"
#include "twoway/checks.hpp"
#include "twoway/decomposition.hpp"
#include "twoway/definability.hpp"
#include "twoway/forest.hpp"
#include "twoway/inversions.hpp"
#include "twoway/loops.hpp"
#include "twoway/oneway.hpp"
#include "twoway/words.hpp"
#include "twoway_tools/corpus.hpp"

namespace twoway::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for bad arguments found after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Transducer load(const std::string& src) {
  if (src.rfind("gen:", 0) == 0) return corpus::generate(src.substr(4));
  std::ifstream in(src);
  if (!in) throw UsageError(fmt::format("cannot open '{}'", src));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_transducer(ss.str());
}

Mode parse_mode(const std::string& m) {
  if (m == "general") return Mode::General;
  if (m == "sweeping") return Mode::Sweeping;
  throw UsageError(fmt::format("unknown mode '{}'", m));
}

std::string in_word(const Transducer& t, const Word& u) { return format_word(t.input, u); }
std::string out_word(const Transducer& t, const Word& w) { return format_word(t.output, w); }

std::string loc(const Location& l) { return fmt::format("({},{})", l.pos, l.level); }

void print_run(std::ostream& out, const Transducer& t, const Run& r) {
  for (int i = 0; i < r.size(); ++i) {
    out << fmt::format("{:>4} {:<8} {}", i, loc(r.locs[i]), t.states[r.states[i]]);
    if (i < r.steps()) {
      const auto& tr = t.transitions[r.trans[i]];
      out << fmt::format("  --{}/{}-->", t.input[tr.read], tr.out.empty() ? "-" : out_word(t, tr.out));
    }
    out << '\n';
  }
  out << "output: " << out_word(t, output_of(r)) << '\n';
}

json anchor_json(const Transducer& t, const Anchor& a) {
  return json{{"loop", {a.loop.x1, a.loop.x2}},
              {"location", {a.location.pos, a.location.level}},
              {"index", a.index},
              {"trace_output", out_word(t, a.trace_output)}};
}

json violation_json(const Transducer& t, const Word& u, const P2Violation& v) {
  return json{{"input", in_word(t, u)},
              {"anchors", {anchor_json(t, v.inversion.first), anchor_json(t, v.inversion.second)}},
              {"trace_outputs", {out_word(t, v.inversion.first.trace_output), out_word(t, v.inversion.second.trace_output)}},
              {"word", out_word(t, v.word)},
              {"period", v.period},
              {"gcd", v.gcd},
              {"divisibility", v.divisibility},
              {"too_long", v.too_long}};
}

const Run& first_run(const RunSet& rs) {
  if (rs.runs.empty()) throw std::invalid_argument("no successful run on this input");
  return rs.runs.front();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-way transducer analysis: runs, flows, loops, inversions and one-way definability.", "twt"};
  app.require_subcommand(1);
  int code = kOk;

  std::string tsrc, tsrc2, word_text, mode_text = "general";
  long bound = 3;
  int maxlen = 6, x1 = 0, x2 = 0, k1 = 0, k2 = 0, n = 2, cap = 0;
  long budget = 400000;
  const std::string tdoc = "transducer file, or gen:SPEC for a corpus transducer";

  auto add_t = [&](CLI::App* c) { c->add_option("transducer", tsrc, tdoc)->required(); };
  auto add_w = [&](CLI::App* c) { c->add_option("word", word_text, "input word, tokens separated by spaces")->required(); };
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", mode_text, "general or sweeping")->check(CLI::IsMember({"general", "sweeping"}));
  };

  auto* c_run = app.add_subcommand("run", "print the first successful run on a word");
  add_t(c_run);
  add_w(c_run);
  auto* c_runs = app.add_subcommand("runs", "list all successful normalized runs on a word");
  add_t(c_runs);
  add_w(c_runs);
  c_runs->add_option("--cap", cap, "crossing sequence height cap (0: 2|Q|-1)");
  auto* c_period = app.add_subcommand("period", "minimal period of a word of single-character symbols");
  c_period->add_option("word", word_text, "the word")->required();
  auto* c_flows = app.add_subcommand("flows", "flow and effect of the interval [x1,x2] on the first run");
  add_t(c_flows);
  add_w(c_flows);
  c_flows->add_option("x1", x1)->required();
  c_flows->add_option("x2", x2)->required();
  auto* c_loops = app.add_subcommand("loops", "loops of the first run with components and traces");
  add_t(c_loops);
  add_w(c_loops);
  auto* c_pump = app.add_subcommand("pump", "pump the loop [x1,x2] of the first run to n copies");
  add_t(c_pump);
  add_w(c_pump);
  c_pump->add_option("x1", x1)->required();
  c_pump->add_option("x2", x2)->required();
  c_pump->add_option("n", n, "total number of copies")->required()->check(CLI::PositiveNumber);
  auto* c_forest = app.add_subcommand("forest", "extract an idempotent producing loop from a zone");
  add_t(c_forest);
  add_w(c_forest);
  c_forest->add_option("x1", x1)->required();
  c_forest->add_option("x2", x2)->required();
  c_forest->add_option("k1", k1, "first run index of the zone")->required();
  c_forest->add_option("k2", k2, "last run index of the zone")->required();
  c_forest->add_option("--bound", bound, "output threshold");
  auto* c_bounds = app.add_subcommand("bounds", "print H, cmax, emax and B for both modes");
  add_t(c_bounds);
  auto* c_inv = app.add_subcommand("inversions", "inversions of every run on a word (JSON lines)");
  add_t(c_inv);
  add_w(c_inv);
  add_mode(c_inv);
  auto* c_p2 = app.add_subcommand("check-p2", "search runs up to maxlen for a periodicity violation");
  add_t(c_p2);
  c_p2->add_option("--bound", bound, "period bound b (0: divisibility only)");
  c_p2->add_option("--maxlen", maxlen, "maximal input length");
  add_mode(c_p2);
  auto* c_dec = app.add_subcommand("decompose", "decompose every run on a word into diagonals and blocks");
  add_t(c_dec);
  add_w(c_dec);
  c_dec->add_option("--bound", bound, "bound b")->check(CLI::PositiveNumber);
  add_mode(c_dec);
  auto* c_one = app.add_subcommand("to-oneway", "construct the one-way transducer T'");
  add_t(c_one);
  c_one->add_option("--bound", bound, "bound b")->check(CLI::PositiveNumber);
  c_one->add_option("--state-budget", budget, "maximal number of explored states")->check(CLI::PositiveNumber);
  auto* c_check = app.add_subcommand("check", "bounded one-way definability verdict (JSON)");
  add_t(c_check);
  c_check->add_option("--bound", bound, "bound b")->check(CLI::PositiveNumber);
  c_check->add_option("--maxlen", maxlen, "maximal input length")->check(CLI::NonNegativeNumber);
  c_check->add_option("--state-budget", budget, "state budget of the construction")->check(CLI::PositiveNumber);
  add_mode(c_check);
  auto* c_eq = app.add_subcommand("equiv", "compare two transducers on all inputs up to maxlen");
  add_t(c_eq);
  c_eq->add_option("other", tsrc2, tdoc)->required();
  c_eq->add_option("--maxlen", maxlen, "maximal input length")->check(CLI::NonNegativeNumber);
  auto* c_gen = app.add_subcommand("gen", "print a corpus transducer");
  std::string spec;
  c_gen->add_option("spec", spec, "double((abc)*), double((a+b)*), double(ab+ba), running, fn(n)")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const Mode mode = parse_mode(mode_text);
    if (c_gen->parsed()) {
      out << print_transducer(corpus::generate(spec));
      return kOk;
    }
    if (c_period->parsed()) {
      Word w;
      for (char ch : word_text)
        if (!std::isspace(static_cast<unsigned char>(ch))) w.push_back(static_cast<unsigned char>(ch));
      out << minimal_period(w) << '\n';
      return kOk;
    }
    const Transducer t = load(tsrc);
    auto word = [&] { return parse_input(t, word_text); };

    if (c_run->parsed() || c_runs->parsed()) {
      auto rs = enumerate_runs(t, word(), cap);
      if (rs.runs.empty()) {
        out << "no successful run\n";
        return kNegative;
      }
      if (c_run->parsed()) {
        print_run(out, t, rs.runs.front());
        return kOk;
      }
      for (size_t i = 0; i < rs.runs.size(); ++i) {
        out << fmt::format("run {}\n", i);
        print_run(out, t, rs.runs[i]);
      }
      if (rs.cap_exceeded) out << "note: some branches exceeded the height cap\n";
      return kOk;
    }
    if (c_flows->parsed()) {
      auto rs = enumerate_runs(t, word());
      const Run& r = first_run(rs);
      if (x1 < 0 || x2 > r.omega() || x1 > x2) throw UsageError("need 0 <= x1 <= x2 <= |u|+2");
      for (const auto& f : intercepted_factors(r, x1, x2))
        out << fmt::format("{} {}..{} {}->{}\n", factor_kind_name(f.kind), f.first, f.last, f.from, f.to);
      out << format_effect(effect_of_interval(r, x1, x2)) << '\n';
      return kOk;
    }
    if (c_loops->parsed()) {
      auto rs = enumerate_runs(t, word());
      const Run& r = first_run(rs);
      for (const auto& l : enumerate_loops(r)) {
        const bool idem = is_idempotent(l.effect);
        out << fmt::format("[{},{}] {} {}\n", l.x1, l.x2, idem ? "idempotent" : "-", format_flow(l.effect.flow));
        if (!idem) continue;
        for (const auto& tr : anchored_traces(r, l)) {
          std::string cyc;
          for (int v : tr.component.cycle) cyc += fmt::format("{}{}", cyc.empty() ? "" : ">", v);
          out << fmt::format("  component {} anchor {} trace '{}'\n", cyc, loc(tr.anchor), out_word(t, tr.output(r)));
        }
      }
      return kOk;
    }
    if (c_pump->parsed()) {
      auto rs = enumerate_runs(t, word());
      const Run& r = first_run(rs);
      auto p = pump(r, make_loop(r, x1, x2), n);
      out << "input: " << in_word(t, p.word) << '\n';
      out << "output: " << out_word(t, output_of(p.run)) << '\n';
      return kOk;
    }
    if (c_forest->parsed()) {
      auto rs = enumerate_runs(t, word());
      const Run& r = first_run(rs);
      auto res = extract_idempotent_anchor(t, r, x1, x2, k1, k2, bound);
      out << fmt::format("zone output: '{}'\n", out_word(t, zone_output(r, x1, x2, k1, k2)));
      if (!res) {
        out << "no extraction (zone output within bound)\n";
        return kNegative;
      }
      out << fmt::format("loop [{},{}] anchor {} index {} trace '{}' {}\n", res->loop.x1, res->loop.x2,
                         loc(res->anchor), res->anchor_index, out_word(t, res->trace_output),
                         res->from_forest ? "forest" : "fallback");
      return kOk;
    }
    if (c_bounds->parsed()) {
      const int q = t.num_states();
      out << fmt::format("states: {}\nH: {}\ncmax: {}\nemax: {}\n", q, max_height(q), t.cmax(), emax(q).str());
      out << "B sweeping: " << bound_B(t, Mode::Sweeping).to_string() << '\n';
      out << "B general: " << bound_B(t, Mode::General).to_string() << '\n';
      return kOk;
    }
    if (c_inv->parsed()) {
      const Word u = word();
      for (const auto& r : enumerate_runs(t, u).runs)
        for (const auto& inv : enumerate_inversions(r, mode))
          out << json{{"input", in_word(t, u)},
                      {"mode", std::string(mode_name(mode))},
                      {"anchors", {anchor_json(t, inv.first), anchor_json(t, inv.second)}},
                      {"word", out_word(t, inversion_word(r, inv))}}
                     .dump()
              << '\n';
      return kOk;
    }
    if (c_p2->parsed()) {
      for (const auto& u : all_words(t, maxlen))
        for (const auto& r : enumerate_runs(t, u).runs)
          if (auto v = check_p2(r, bound, mode)) {
            out << violation_json(t, u, *v).dump() << '\n';
            return kNegative;
          }
      out << json{{"violation", nullptr}, {"maxlen", maxlen}, {"bound", bound}}.dump() << '\n';
      return kOk;
    }
    if (c_dec->parsed()) {
      const Word u = word();
      const int height = mode == Mode::Sweeping ? max_height(t.num_states()) : 0;
      auto rs = enumerate_runs(t, u);
      first_run(rs);
      for (size_t i = 0; i < rs.runs.size(); ++i) {
        const Run& r = rs.runs[i];
        auto d = find_decomposition(r, bound, mode, height);
        if (!d) {
          out << fmt::format("run {}: no {}-decomposition\n", i, bound);
          code = kNegative;
          continue;
        }
        out << fmt::format("run {}:\n", i);
        for (const auto& p : d->pieces) {
          out << fmt::format("  {} {} -> {}", p.kind == PieceKind::Block ? "block" : "diagonal",
                             loc(r.locs[p.from]), loc(r.locs[p.to]));
          if (p.periodic) {
            const auto& [w0, w1, w2] = *p.periodic;
            out << fmt::format(" '{}' '{}' '{}'", out_word(t, w0), out_word(t, w1), out_word(t, w2));
          }
          out << '\n';
        }
      }
      return code;
    }
    if (c_one->parsed()) {
      OnewayOptions o;
      o.bound = bound;
      o.state_budget = budget;
      out << print_transducer(construct_oneway(t, o));
      return kOk;
    }
    if (c_check->parsed()) {
      DefinabilityOptions o{bound, maxlen, mode, budget};
      Verdict v = check_definable(t, o);
      json j{{"verdict", verdict_name(v)}};
      if (auto* nd = std::get_if<NotDefinable>(&v)) {
        const json cert = violation_json(t, nd->input, nd->violation);
        for (auto it = cert.begin(); it != cert.end(); ++it) j[it.key()] = it.value();
        code = kNegative;
      } else if (auto* ok = std::get_if<ConsistentUpTo>(&v)) {
        j["maxlen"] = ok->maxlen;
        j["bound"] = ok->bound;
        j["oneway_states"] = ok->oneway_states;
        j["oneway_transitions"] = ok->oneway_transitions;
      } else {
        const auto& inc = std::get<Inconclusive>(v);
        j["stage"] = inc.stage;
        j["reason"] = inc.reason;
        code = kNegative;
      }
      out << j.dump() << '\n';
      return code;
    }
    if (c_eq->parsed()) {
      const Transducer t2 = load(tsrc2);
      auto cex = equiv_bounded(t, t2, maxlen);
      if (!cex) {
        out << fmt::format("equivalent on inputs up to length {}\n", maxlen);
        return kOk;
      }
      auto show = [](const std::optional<std::vector<std::string>>& o) {
        if (!o) return std::string("undefined");
        std::string s;
        for (const auto& x : *o) s += (s.empty() ? "" : " ") + x;
        return "'" + s + "'";
      };
      std::string in;
      for (const auto& x : cex->input) in += (in.empty() ? "" : " ") + x;
      out << fmt::format("differ on '{}': {} vs {}\n", in, show(cex->out1), show(cex->out2));
      return kNegative;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
  return code;
}

}  // namespace twoway::cli
