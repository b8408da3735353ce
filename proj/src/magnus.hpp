#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "words.hpp"

namespace freesep {

using Coeff = boost::multiprecision::cpp_int;

// Monomial in noncommuting variables X_0, X_1, ...: a packed sequence of
// generator indices, one byte per factor. The empty string is the constant.
using Monomial = std::string;

// Integer-coefficient noncommutative polynomial truncated at a degree cap.
// Zero coefficients are never stored.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cap);
  static TruncatedSeries one(int cap);

  int cap() const { return cap_; }
  Coeff coeff(const Monomial& m) const;
  // adds c to the coefficient of m; terms beyond the cap are discarded
  void add(const Monomial& m, const Coeff& c);
  std::size_t term_count() const { return terms_.size(); }
  bool is_one() const;

  const std::unordered_map<Monomial, Coeff>& terms() const { return terms_; }
  // terms ordered by (degree, lexicographic), for deterministic output
  std::vector<std::pair<Monomial, Coeff>> sorted_terms() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

 private:
  int cap_;
  std::unordered_map<Monomial, Coeff> terms_;
};

// Product with all monomials of degree > cap discarded. Caps must agree.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

// Magnus expansion: g -> 1 + X_g, g^-1 -> 1 - X_g + X_g^2 - ... (truncated).
// Multiplicative; the constant term is always 1.
TruncatedSeries magnus(const Word& w, int cap);

// Smallest degree of a nonzero non-constant term of magnus(w, cap), when it is
// below the cap; nullopt means ">= cap". Requires cap >= 2.
// w lies in gamma_d F iff the weight is >= d (Magnus criterion).
std::optional<int> lcs_weight(const Word& w, int cap);

// Membership in the n-th lower central series term gamma_n F; gamma_1 F = F.
bool in_gamma(const Word& w, int n);

// "1 + YX - XY" style rendering, variables named by uppercased generators.
std::string format_series(const Alphabet& alphabet, const TruncatedSeries& s);

}  // namespace freesep
