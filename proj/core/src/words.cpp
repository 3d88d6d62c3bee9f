#include "twoway/words.hpp"

#include <fmt/format.h>
#include <numeric>
#include <stdexcept>

namespace twoway {

int minimal_period(const Word& w) {
  int n = static_cast<int>(w.size());
  if (n == 0) return 0;
  // failure function: longest proper border of each prefix
  std::vector<int> fail(n, 0);
  for (int i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return n - fail[n - 1];
}

bool has_period(const Word& w, int p) {
  if (p < 1) throw std::invalid_argument("period must be positive");
  for (size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

FineWilfResult fine_wilf(const Word& w1, const Word& w2, int m, int p1, int p2) {
  if (p1 < 1 || p2 < 1) throw std::invalid_argument("periods must be positive");
  if (!has_period(w1, p1)) throw std::invalid_argument(fmt::format("w1 does not have period {}", p1));
  if (!has_period(w2, p2)) throw std::invalid_argument(fmt::format("w2 does not have period {}", p2));
  if (m < 0 || m > static_cast<int>(w1.size()) || m > static_cast<int>(w2.size()))
    throw std::invalid_argument("overlap longer than w1 or w2");
  if (!std::equal(w1.end() - m, w1.end(), w2.begin()))
    throw std::invalid_argument("suffix of w1 differs from prefix of w2");
  int g = std::gcd(p1, p2);
  FineWilfResult r;
  if (m < p1 + p2 - g) {
    r.reason = fmt::format("overlap {} shorter than p1+p2-gcd = {}", m, p1 + p2 - g);
    return r;
  }
  Word w3 = w1;
  w3.insert(w3.end(), w2.begin() + m, w2.end());
  if (!has_period(w1, g) || !has_period(w2, g) || !has_period(w3, g))
    throw std::logic_error("combined word lost the gcd period");
  r.combined = std::move(w3);
  return r;
}

std::optional<AlmostPeriodic> almost_periodic_decompose(const Word& w, int p) {
  int n = static_cast<int>(w.size());
  for (int i = 0; i <= std::min(p, n); ++i)
    for (int j = 0; j <= std::min(p, n - i); ++j) {
      Word mid(w.begin() + i, w.end() - j);
      if (minimal_period(mid) <= p)
        return AlmostPeriodic{Word(w.begin(), w.begin() + i), std::move(mid), Word(w.end() - j, w.end())};
    }
  return std::nullopt;
}

Word instantiate(const IteratedFactorWord& s, const std::vector<int>& exponents) {
  size_t k = s.slots.size();
  if (s.constants.size() != k + 2) throw std::invalid_argument("expected slots.size()+2 constants");
  if (exponents.size() != k) throw std::invalid_argument("one exponent per slot expected");
  Word w = s.constants[0];
  for (size_t i = 0; i < k; ++i)
    for (int e = 0; e < exponents[i]; ++e) w.insert(w.end(), s.constants[i + 1].begin(), s.constants[i + 1].end());
  w.insert(w.end(), s.constants[k + 1].begin(), s.constants[k + 1].end());
  return w;
}

Word instantiate(const IteratedFactorWord& s, int n1, int n2) {
  std::vector<int> e;
  for (Slot sl : s.slots) e.push_back(sl == Slot::N1 ? n1 : n2);
  return instantiate(s, e);
}

bool check_periods_lemma(const IteratedFactorWord& s, int p, int nBig,
                         const std::vector<std::vector<int>>& samples) {
  if (p < 1) throw std::invalid_argument("period must be positive");
  if (nBig <= p) throw std::invalid_argument("nBig must exceed p");
  if (!has_period(instantiate(s, std::vector<int>(s.slots.size(), nBig)), p))
    throw std::invalid_argument("base instance is not p-periodic");
  for (const auto& e : samples)
    if (!has_period(instantiate(s, e), p)) return false;
  return true;
}

}  // namespace twoway
