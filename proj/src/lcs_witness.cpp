#include "lcs_witness.hpp"

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "magnus.hpp"

namespace freesep {

AbelianVector abelianize(std::size_t rank, const Word& w) {
  AbelianVector v(rank, 0);
  for (Letter l : w.letters()) {
    if (l.gen >= rank) {
      throw std::invalid_argument("abelianize: letter outside the declared rank");
    }
    v[l.gen] += l.sign;
  }
  return v;
}

bool lattice_contains(std::span<const AbelianVector> basis, const AbelianVector& v) {
  using Int = boost::multiprecision::cpp_int;
  const std::size_t cols = v.size();
  std::vector<std::vector<Int>> m;
  m.reserve(basis.size());
  for (const auto& row : basis) {
    if (row.size() != cols) {
      throw std::invalid_argument("lattice_contains: dimension mismatch");
    }
    m.emplace_back(row.begin(), row.end());
  }

  // Integer row echelon form via repeated gcd elimination.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = row; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (best == m.size() || abs(m[r][col]) < abs(m[best][col])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[best], m[row]);
      bool residue = false;
      for (std::size_t r = row + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        Int q = m[r][col] / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[r][c] -= q * m[row][c];
        residue = residue || m[r][col] != 0;
      }
      if (!residue) break;
    }
    if (m[row][col] != 0) {
      if (m[row][col] < 0) {
        for (std::size_t c = col; c < cols; ++c) m[row][c] = -m[row][c];
      }
      pivots.push_back({row, col});
      ++row;
    }
  }

  std::vector<Int> rem(v.begin(), v.end());
  for (auto [r, c] : pivots) {
    if (rem[c] % m[r][c] != 0) return false;
    Int q = rem[c] / m[r][c];
    for (std::size_t k = c; k < cols; ++k) rem[k] -= q * m[r][k];
  }
  for (const Int& x : rem) {
    if (x != 0) return false;
  }
  return true;
}

Alphabet witness_alphabet() { return Alphabet(std::vector<char>{'a', 'b'}); }

WitnessReport witness(int n) {
  if (n < 2) throw std::invalid_argument("witness: n must be >= 2");
  const Alphabet x_alphabet(2);
  const std::vector<Word> images = paper_generators(x_alphabet);  // a = x[y,x], b = y

  const Word a = letter_word(0);
  const Word b = letter_word(1);
  Word w = a;
  for (int k = 3; k <= n; ++k) w = multiply(a, commutator(w, b));

  Word expanded = apply_endomorphism(images, w);
  const Word discrepancy = multiply(inverse(expanded), letter_word(0));
  if (!in_gamma(discrepancy, n)) {
    throw std::logic_error("witness certification failed at class " + std::to_string(n));
  }
  return WitnessReport{n, std::move(w), std::move(expanded), n};
}

std::vector<WitnessReport> nilpotent_image_equality(int n_max) {
  if (n_max < 2) throw std::invalid_argument("nilpotent_image_equality: n_max must be >= 2");
  std::vector<WitnessReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max - 1));
  for (int n = 2; n <= n_max; ++n) reports.push_back(witness(n));
  return reports;
}

}  // namespace freesep
