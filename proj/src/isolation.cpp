#include "isolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "util.hpp"

namespace freesep {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t reduced_word_count(int rank, int max_len) {
  const std::uint64_t first = 2 * static_cast<std::uint64_t>(rank);
  std::uint64_t total = 0, per_len = first;
  for (int l = 1; l <= max_len; ++l) {
    total += per_len;
    per_len *= first - 1;
  }
  return total;
}

namespace {

std::vector<int> normalized_exponents(const ScanBounds& bounds) {
  if (bounds.max_word_length < 1) {
    throw std::invalid_argument("isolation scan: max_word_length must be >= 1");
  }
  std::vector<int> exps = bounds.exponents;
  for (int m : exps) {
    if (m < 2) throw std::invalid_argument("isolation scan: exponents must be >= 2");
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  return exps;
}

Letter letter_from_key(int key) {
  return Letter{static_cast<std::uint8_t>(key / 2),
                static_cast<std::int8_t>(key % 2 == 0 ? 1 : -1)};
}

// Depth-first over reduced extensions, letters in key order, so each chunk
// visits its words in (length, lex)-compatible order per length.
void scan_from(const SubgroupGraph& g, std::vector<Letter>& prefix, int max_len,
               const std::vector<int>& exps, std::vector<Violation>& out) {
  const Word f = Word::reduce(prefix);
  if (!g.contains(f)) {
    for (int m : exps) {
      if (g.contains(power(f, m))) {
        out.push_back(Violation{f, m, true, false});
      }
    }
  }
  if (static_cast<int>(prefix.size()) == max_len) return;
  const int dirs = 2 * g.rank();
  const int banned = prefix.back().inverse().key();
  for (int key = 0; key < dirs; ++key) {
    if (key == banned) continue;
    prefix.push_back(letter_from_key(key));
    scan_from(g, prefix, max_len, exps, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Violation> isolation_scan(const SubgroupGraph& g, const ScanBounds& bounds,
                                      int threads) {
  const std::vector<int> exps = normalized_exponents(bounds);
  const std::size_t dirs = static_cast<std::size_t>(2 * g.rank());

  // one chunk per first letter; merged and sorted, so partitioning is invisible
  std::vector<std::vector<Violation>> found(dirs);
  parallel_chunks(dirs, resolve_threads(threads), [&](std::size_t chunk) {
    std::vector<Letter> prefix{letter_from_key(static_cast<int>(chunk))};
    scan_from(g, prefix, bounds.max_word_length, exps, found[chunk]);
  });

  std::vector<Violation> all;
  for (auto& part : found) {
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const Violation& a, const Violation& b) {
    if (!(a.root == b.root)) return a.root < b.root;
    return a.exponent < b.exponent;
  });
  return all;
}

std::vector<Violation> p_prime_isolation_scan(const SubgroupGraph& g, int p,
                                              const ScanBounds& bounds, int threads) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p_prime_isolation_scan: " + std::to_string(p) +
                                " is not prime");
  }
  ScanBounds restricted = bounds;
  restricted.exponents.clear();
  for (int q : bounds.exponents) {
    if (is_prime(q) && q != p) restricted.exponents.push_back(q);
  }
  return isolation_scan(g, restricted, threads);
}

}  // namespace freesep
