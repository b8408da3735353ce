#pragma once

#include <cstdint>
#include <vector>

#include "stallings.hpp"
#include "words.hpp"

namespace freesep {

// Search bounds for the brute-force root-closure scans. The scan enumerates
// every reduced word of length 1..max_word_length and every listed exponent,
// so it can only certify isolation up to these bounds.
struct ScanBounds {
  int max_word_length = 1;
  std::vector<int> exponents = {2, 3, 4, 5, 6};
};

// A root that escapes the subgroup although its power is inside.
struct Violation {
  Word root;
  int exponent = 0;
  bool power_in_subgroup = true;  // evidence, re-verifiable via contains
  bool root_in_subgroup = false;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.root == b.root && a.exponent == b.exponent;
  }
};

bool is_prime(int q);

// All (f, m) with |f| in 1..L, m in E, f^m in the subgroup, f not in it,
// ordered by (length, lexicographic, exponent). Deterministic for any thread
// count.
std::vector<Violation> isolation_scan(const SubgroupGraph& g, const ScanBounds& bounds,
                                      int threads = 1);

// Same scan with the exponent set restricted to primes q != p.
std::vector<Violation> p_prime_isolation_scan(const SubgroupGraph& g, int p,
                                              const ScanBounds& bounds, int threads = 1);

// Number of reduced words of length 1..max_len over the given rank:
// sum of 2r * (2r-1)^(l-1).
std::uint64_t reduced_word_count(int rank, int max_len);

}  // namespace freesep
