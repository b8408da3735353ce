#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "words.hpp"

namespace freesep {

// Folded basepointed core graph of a finitely generated subgroup. Vertices are
// 0..n-1 with the basepoint at 0 (canonical BFS numbering); transitions are a
// partial function (vertex, letter) -> vertex, deterministic and
// co-deterministic by folding.
class SubgroupGraph {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  static SubgroupGraph build(const Alphabet& alphabet, std::span<const Word> generators);

  const Alphabet& alphabet() const { return alphabet_; }
  int rank() const { return alphabet_.rank(); }
  std::size_t vertex_count() const { return table_.size(); }
  std::size_t basepoint() const { return 0; }

  // npos if the transition is undefined
  std::size_t step(std::size_t v, Letter l) const { return table_[v][direction(l)]; }

  // true iff the path reading w from the basepoint exists and closes up
  bool contains(const Word& w) const;

  // finite index n iff the transition table is total; then n = vertex count
  std::optional<std::size_t> finite_index() const;

  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  static int direction(Letter l) { return l.key(); }

 private:
  SubgroupGraph(Alphabet alphabet, std::vector<std::vector<std::size_t>> table)
      : alphabet_(std::move(alphabet)), table_(std::move(table)) {}

  Alphabet alphabet_;
  std::vector<std::vector<std::size_t>> table_;  // [vertex][2*gen + (sign<0)]
};

// Homomorphism to a symmetric group: one permutation of {0..degree-1} per
// generator.
struct PermutationRep {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> images;

  std::size_t apply(std::size_t point, const Word& w) const;
  bool valid() const;
};

// Constructive finite separability witness (M. Hall): extends the core graph
// of the subgroup by the path of f, completes every partial transition to a
// permutation, and checks that f displaces the basepoint. Requires f outside
// the subgroup.
PermutationRep separating_permutation_rep(const SubgroupGraph& g, const Word& f);

}  // namespace freesep
