#include "words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "errors.hpp"

namespace freesep {

namespace {
// First four names match the conventional x, y, z_i generators.
constexpr std::string_view kNamePool = "xyzwuvabcdefghijklmnopqrst";
}  // namespace

Alphabet::Alphabet(int rank) {
  if (rank < 1 || rank > static_cast<int>(kNamePool.size())) {
    throw std::invalid_argument("alphabet rank must be between 1 and " +
                                std::to_string(kNamePool.size()));
  }
  names_.assign(kNamePool.begin(), kNamePool.begin() + rank);
}

Alphabet::Alphabet(std::vector<char> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must have rank >= 1");
  for (char c : names_) {
    if (!std::islower(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("generator names must be lowercase letters");
    }
  }
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("generator names must be distinct");
  }
}

int Alphabet::index_of(char name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
}

Word letter_word(int gen, int sign) {
  Letter l{static_cast<std::uint8_t>(gen), static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  return Word::reduce(std::span<const Letter>(&l, 1));
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(raw);
}

Word inverse(const Word& u) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return Word::reduce(raw);
}

Word power(const Word& u, long long m) {
  if (m < 0) return power(inverse(u), -m);
  Word acc;
  for (long long i = 0; i < m; ++i) acc = multiply(acc, u);
  return acc;
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

CyclicReduction cyclically_reduce(const Word& f) {
  std::vector<Letter> core(f.letters());
  std::vector<Letter> conj;
  std::size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core[lo] == core[hi - 1].inverse()) {
    conj.push_back(core[lo]);
    ++lo;
    --hi;
  }
  std::vector<Letter> mid(core.begin() + static_cast<std::ptrdiff_t>(lo),
                          core.begin() + static_cast<std::ptrdiff_t>(hi));
  return CyclicReduction{Word::reduce(mid), Word::reduce(conj)};
}

Word apply_endomorphism(std::span<const Word> images, const Word& w) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    if (l.gen >= images.size()) {
      throw std::invalid_argument("apply_endomorphism: no image for generator index " +
                                  std::to_string(l.gen));
    }
    const Word& img = images[l.gen];
    if (l.sign > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return Word::reduce(raw);
}

std::vector<Word> paper_generators(const Alphabet& alphabet, std::span<const int> passive) {
  if (alphabet.rank() < 2) {
    throw std::invalid_argument(
        "paper_generators: the construction needs a nonabelian free group (rank >= 2)");
  }
  Word x = letter_word(0);
  Word y = letter_word(1);
  std::vector<Word> gens;
  gens.push_back(multiply(x, commutator(y, x)));  // x [y,x] = x y^-1 x^-1 y x
  gens.push_back(y);
  std::vector<int> extra(passive.begin(), passive.end());
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  for (int j : extra) {
    if (j < 2 || j >= alphabet.rank()) {
      throw std::invalid_argument("paper_generators: passive index " + std::to_string(j) +
                                  " out of range");
    }
    gens.push_back(letter_word(j));
  }
  return gens;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    const bool upper = std::isupper(c) != 0;
    const char lower = static_cast<char>(std::tolower(c));
    const int gen = alphabet.index_of(lower);
    if (!std::isalpha(c) || gen < 0) {
      throw ParseError("unknown generator '" + std::string(1, text[i]) +
                           "' at position " + std::to_string(i),
                       i);
    }
    raw.push_back(Letter{static_cast<std::uint8_t>(gen),
                         static_cast<std::int8_t>(upper ? -1 : 1)});
  }
  return Word::reduce(raw);
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    char c = alphabet.name(l.gen);
    out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace freesep
