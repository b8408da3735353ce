#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freesep {

// Finite symmetrized alphabet of a free group. Generator names are distinct
// single lowercase characters; the default pool starts x, y, z, w.
class Alphabet {
 public:
  explicit Alphabet(int rank);
  explicit Alphabet(std::vector<char> names);

  int rank() const { return static_cast<int>(names_.size()); }
  char name(int gen) const { return names_.at(static_cast<std::size_t>(gen)); }
  // -1 if the character does not name a generator
  int index_of(char name) const;

 private:
  std::vector<char> names_;
};

// One letter of a word: generator index plus sign (+1 generator, -1 inverse).
struct Letter {
  std::uint8_t gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  // total order used by all deterministic enumerations: x < x^-1 < y < y^-1 < ...
  int key() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend bool operator==(Letter a, Letter b) { return a.gen == b.gen && a.sign == b.sign; }
  friend bool operator<(Letter a, Letter b) { return a.key() < b.key(); }
};

// A freely reduced word. The only way to construct one is Word::reduce, so the
// no-adjacent-cancellation invariant holds everywhere by construction.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence; idempotent.
  static Word reduce(std::span<const Letter> raw);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  // shortlex: length first, then letter order
  friend bool operator<(const Word& a, const Word& b);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

Word letter_word(int gen, int sign = 1);

Word multiply(const Word& u, const Word& v);
Word inverse(const Word& u);
Word power(const Word& u, long long m);

// [u, v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // f = conjugator * core * conjugator^-1
};
CyclicReduction cyclically_reduce(const Word& f);

// Substitutes images[g] for each letter with generator g (inverse images for
// inverse letters), then reduces. Images may be words over any alphabet.
Word apply_endomorphism(std::span<const Word> images, const Word& w);

// Generators of the subgroup <x [y,x], y, z_j (j in passive)>. Requires
// rank >= 2; passive holds extra generator indices (each >= 2 and < rank).
std::vector<Word> paper_generators(const Alphabet& alphabet,
                                   std::span<const int> passive = {});

// Text form: one character per letter, uppercase = inverse ("xYXyx").
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

}  // namespace freesep
