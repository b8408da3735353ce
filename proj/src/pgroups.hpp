#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "words.hpp"

namespace freesep {

// Canonical element encoding: the residue for cyclic groups, the row-major
// above-diagonal entries for unitriangular matrix groups.
using GroupElement = std::vector<int>;

// A concrete finite p-group: Z/p^k, or the n x n upper unitriangular matrices
// over Z/p (n = 3 is the Heisenberg group mod p).
class FiniteGroup {
 public:
  enum class Kind { Cyclic, Unitriangular };

  static FiniteGroup cyclic(int p, int k);
  static FiniteGroup unitriangular(int n, int p);

  Kind kind() const { return kind_; }
  int prime() const { return p_; }
  std::uint64_t order() const { return order_; }
  std::string name() const;

  GroupElement identity() const;
  GroupElement compose(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  // mixed-radix decoding of 0..order-1; enumerates the whole carrier
  GroupElement element_at(std::uint64_t idx) const;
  bool valid_element(const GroupElement& a) const;

 private:
  FiniteGroup(Kind kind, int p, int param, std::uint64_t order)
      : kind_(kind), p_(p), param_(param), order_(order) {}

  Kind kind_;
  int p_;
  int param_;  // k for cyclic, n for unitriangular
  std::uint64_t order_;
};

// F is free, so any assignment of target elements to generators extends.
struct Homomorphism {
  FiniteGroup target;
  std::vector<GroupElement> images;  // one per generator of F
};

// Multiplicative extension to words.
GroupElement evaluate(const Homomorphism& h, const Word& w);

// Subgroup generated by elems (BFS under right multiplication); contains the
// identity.
std::set<GroupElement> closure(const FiniteGroup& target, const std::vector<GroupElement>& elems);

struct TargetCount {
  std::string target;
  std::uint64_t homs = 0;
  std::uint64_t separating = 0;
};

struct SeparabilityReport {
  std::vector<Word> generators;
  Word excluded;
  std::vector<TargetCount> targets;
  std::uint64_t homs_total = 0;
  std::uint64_t homs_separating = 0;
  std::optional<Homomorphism> first_separating;  // first in enumeration order
};

inline constexpr std::uint64_t kDefaultHomBudget = 1'000'000;

// Enumerates every homomorphism F -> target (images assigned to the generators
// that occur in gens or f; the rest map to the identity) and counts those with
// evaluate(f) outside closure(evaluate(gens)). Throws BudgetError when a
// target's assignment space order^k exceeds the budget.
SeparabilityReport separability_scan(const Alphabet& alphabet, std::span<const Word> gens,
                                     const Word& f, std::span<const FiniteGroup> targets,
                                     std::uint64_t budget = kDefaultHomBudget,
                                     int threads = 1);

}  // namespace freesep
