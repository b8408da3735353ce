#include "magnus.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace freesep {

TruncatedSeries::TruncatedSeries(int cap) : cap_(cap) {
  if (cap < 1) throw std::invalid_argument("series degree cap must be >= 1");
}

TruncatedSeries TruncatedSeries::one(int cap) {
  TruncatedSeries s(cap);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

Coeff TruncatedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const Coeff& c) {
  if (static_cast<int>(m.size()) > cap_ || c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool TruncatedSeries::is_one() const {
  return terms_.size() == 1 && coeff(Monomial{}) == 1;
}

std::vector<std::pair<Monomial, Coeff>> TruncatedSeries::sorted_terms() const {
  std::vector<std::pair<Monomial, Coeff>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.cap() != t.cap()) {
    throw std::invalid_argument("series_mul: degree caps differ");
  }
  const std::size_t cap = static_cast<std::size_t>(s.cap());
  TruncatedSeries out(s.cap());
  for (const auto& [m1, c1] : s.terms()) {
    for (const auto& [m2, c2] : t.terms()) {
      if (m1.size() + m2.size() > cap) continue;
      out.add(m1 + m2, c1 * c2);
    }
  }
  return out;
}

namespace {

TruncatedSeries letter_series(Letter l, int cap) {
  TruncatedSeries s(cap);
  s.add(Monomial{}, 1);
  if (l.sign > 0) {
    s.add(Monomial(1, static_cast<char>(l.gen)), 1);
  } else {
    for (int d = 1; d <= cap; ++d) {
      s.add(Monomial(static_cast<std::size_t>(d), static_cast<char>(l.gen)),
            d % 2 != 0 ? -1 : 1);
    }
  }
  return s;
}

}  // namespace

TruncatedSeries magnus(const Word& w, int cap) {
  TruncatedSeries acc = TruncatedSeries::one(cap);
  // cache the two series per generator; words reuse letters heavily
  std::unordered_map<int, TruncatedSeries> cache;
  for (Letter l : w.letters()) {
    auto it = cache.find(l.key());
    if (it == cache.end()) it = cache.emplace(l.key(), letter_series(l, cap)).first;
    acc = series_mul(acc, it->second);
  }
  return acc;
}

std::optional<int> lcs_weight(const Word& w, int cap) {
  if (cap < 2) throw std::invalid_argument("lcs_weight: cap must be >= 2");
  TruncatedSeries s = magnus(w, cap);
  int best = cap + 1;
  for (const auto& [m, c] : s.terms()) {
    if (!m.empty() && static_cast<int>(m.size()) < best) best = static_cast<int>(m.size());
  }
  if (best >= cap) return std::nullopt;
  return best;
}

bool in_gamma(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("in_gamma: n must be >= 1");
  if (n == 1) return true;
  return !lcs_weight(w, n).has_value();
}

std::string format_series(const Alphabet& alphabet, const TruncatedSeries& s) {
  const auto terms = s.sorted_terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Coeff abs = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.empty()) {
      out += abs.str();
      continue;
    }
    if (abs != 1) out += abs.str();
    for (char idx : m) {
      out += static_cast<char>(
          std::toupper(static_cast<unsigned char>(alphabet.name(static_cast<int>(idx)))));
    }
  }
  return out;
}

}  // namespace freesep
