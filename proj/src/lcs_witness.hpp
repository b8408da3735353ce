#pragma once

#include <span>
#include <vector>

#include "words.hpp"

namespace freesep {

// Exponent-sum vector of a word, one entry per generator.
using AbelianVector = std::vector<long long>;

AbelianVector abelianize(std::size_t rank, const Word& w);

// True iff v is an integer combination of the basis vectors, decided by exact
// integer row reduction.
bool lattice_contains(std::span<const AbelianVector> basis, const AbelianVector& v);

// Alphabet {a, b} for words over the subgroup generators a = x[y,x], b = y.
Alphabet witness_alphabet();

// Certificate that the images of H = <a, b> and of <x, y> agree in F/gamma_n F:
// a word W_n over {a, b} whose expansion differs from x by an element of
// gamma_n F, certified by the Magnus oracle.
struct WitnessReport {
  int n = 0;
  Word witness;   // over witness_alphabet()
  Word expanded;  // over the rank-2 alphabet {x, y}
  int discrepancy_weight_at_least = 0;  // = n once certified
};

// W_2 = a, W_{k+1} = a [W_k, b]; certifies in_gamma(expanded^-1 x, n) before
// returning. Certification failure means an implementation bug and throws.
WitnessReport witness(int n);

// witness(n) for 2 <= n <= n_max, ordered by n.
std::vector<WitnessReport> nilpotent_image_equality(int n_max);

}  // namespace freesep
