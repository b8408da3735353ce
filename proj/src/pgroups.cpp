#include "pgroups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "errors.hpp"
#include "isolation.hpp"  // is_prime
#include "util.hpp"

namespace freesep {

namespace {

// (row, col) pairs of the above-diagonal entries in row-major order
constexpr std::array<std::pair<int, int>, 6> kUpperEntries = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::vector<std::pair<int, int>> upper_entries(int n) {
  std::vector<std::pair<int, int>> out;
  for (auto [r, c] : kUpperEntries) {
    if (c < n) out.push_back({r, c});
  }
  return out;
}

using Matrix = std::array<std::array<int, 4>, 4>;

Matrix to_matrix(int n, const GroupElement& e) {
  Matrix m{};
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto entries = upper_entries(n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m[entries[i].first][entries[i].second] = e[i];
  }
  return m;
}

GroupElement from_matrix(int n, const Matrix& m) {
  GroupElement e;
  for (auto [r, c] : upper_entries(n)) e.push_back(m[r][c]);
  return e;
}

Matrix mat_mul(int n, int p, const Matrix& a, const Matrix& b) {
  Matrix out{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<long long>(a[i][k]) * b[k][j];
      out[i][j] = static_cast<int>(((acc % p) + p) % p);
    }
  }
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("cyclic: p must be prime");
  if (k < 1) throw std::invalid_argument("cyclic: k must be >= 1");
  std::uint64_t order = 1;
  for (int i = 0; i < k; ++i) {
    order *= static_cast<std::uint64_t>(p);
    if (order > (1u << 30)) throw std::invalid_argument("cyclic: order too large");
  }
  return FiniteGroup(Kind::Cyclic, p, k, order);
}

FiniteGroup FiniteGroup::unitriangular(int n, int p) {
  if (!is_prime(p)) throw std::invalid_argument("unitriangular: p must be prime");
  if (n != 3 && n != 4) throw std::invalid_argument("unitriangular: n must be 3 or 4");
  std::uint64_t order = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) order *= static_cast<std::uint64_t>(p);
  return FiniteGroup(Kind::Unitriangular, p, n, order);
}

std::string FiniteGroup::name() const {
  if (kind_ == Kind::Cyclic) {
    return "cyclic(" + std::to_string(p_) + "," + std::to_string(param_) + ")";
  }
  return "unitriangular(" + std::to_string(param_) + "," + std::to_string(p_) + ")";
}

GroupElement FiniteGroup::identity() const {
  if (kind_ == Kind::Cyclic) return GroupElement{0};
  return GroupElement(static_cast<std::size_t>(param_ * (param_ - 1) / 2), 0);
}

GroupElement FiniteGroup::compose(const GroupElement& a, const GroupElement& b) const {
  if (kind_ == Kind::Cyclic) {
    const long long m = static_cast<long long>(order_);
    return GroupElement{static_cast<int>((a[0] + b[0]) % m)};
  }
  return from_matrix(param_, mat_mul(param_, p_, to_matrix(param_, a), to_matrix(param_, b)));
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  if (kind_ == Kind::Cyclic) {
    const long long m = static_cast<long long>(order_);
    return GroupElement{static_cast<int>((m - a[0]) % m)};
  }
  // (I + N)^-1 = I - N + N^2 - N^3, N strictly upper so N^n = 0
  const int n = param_;
  Matrix nil = to_matrix(n, a);
  for (int i = 0; i < n; ++i) nil[i][i] = 0;
  Matrix acc{};  // I
  for (int i = 0; i < n; ++i) acc[i][i] = 1;
  Matrix pow = nil;
  int sign = -1;
  for (int d = 1; d < n; ++d) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        acc[i][j] = ((acc[i][j] + sign * pow[i][j]) % p_ + p_) % p_;
      }
    }
    pow = mat_mul(n, p_, pow, nil);
    sign = -sign;
  }
  return from_matrix(n, acc);
}

GroupElement FiniteGroup::element_at(std::uint64_t idx) const {
  if (idx >= order_) throw std::invalid_argument("element_at: index out of range");
  if (kind_ == Kind::Cyclic) return GroupElement{static_cast<int>(idx)};
  const std::size_t dims = static_cast<std::size_t>(param_ * (param_ - 1) / 2);
  GroupElement e(dims, 0);
  for (std::size_t i = dims; i-- > 0;) {
    e[i] = static_cast<int>(idx % static_cast<std::uint64_t>(p_));
    idx /= static_cast<std::uint64_t>(p_);
  }
  return e;
}

bool FiniteGroup::valid_element(const GroupElement& a) const {
  if (kind_ == Kind::Cyclic) {
    return a.size() == 1 && a[0] >= 0 && static_cast<std::uint64_t>(a[0]) < order_;
  }
  if (a.size() != static_cast<std::size_t>(param_ * (param_ - 1) / 2)) return false;
  return std::all_of(a.begin(), a.end(), [this](int x) { return x >= 0 && x < p_; });
}

GroupElement evaluate(const Homomorphism& h, const Word& w) {
  GroupElement acc = h.target.identity();
  for (Letter l : w.letters()) {
    if (l.gen >= h.images.size()) {
      throw std::invalid_argument("evaluate: no image for generator index " +
                                  std::to_string(l.gen));
    }
    const GroupElement& img = h.images[l.gen];
    acc = h.target.compose(acc, l.sign > 0 ? img : h.target.inverse(img));
  }
  return acc;
}

std::set<GroupElement> closure(const FiniteGroup& target, const std::vector<GroupElement>& elems) {
  for (const auto& e : elems) {
    if (!target.valid_element(e)) throw std::invalid_argument("closure: invalid element");
  }
  std::set<GroupElement> seen{target.identity()};
  std::deque<GroupElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    GroupElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : elems) {
      GroupElement next = target.compose(cur, g);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

namespace {

std::uint64_t checked_pow(const FiniteGroup& target, std::uint64_t base, std::size_t exp,
                          std::uint64_t budget) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (acc > budget / base) {
      throw BudgetError("separability_scan: " + target.name() + " needs |G|^" +
                            std::to_string(exp) + " homomorphisms, over the budget of " +
                            std::to_string(budget),
                        budget);
    }
    acc *= base;
  }
  if (acc > budget) {
    throw BudgetError("separability_scan: " + target.name() + " needs " + std::to_string(acc) +
                          " homomorphisms, over the budget of " + std::to_string(budget),
                      budget);
  }
  return acc;
}

}  // namespace

SeparabilityReport separability_scan(const Alphabet& alphabet, std::span<const Word> gens,
                                     const Word& f, std::span<const FiniteGroup> targets,
                                     std::uint64_t budget, int threads) {
  const std::size_t rank = static_cast<std::size_t>(alphabet.rank());
  std::vector<char> occurs(rank, 0);
  auto mark = [&occurs](const Word& w) {
    for (Letter l : w.letters()) occurs[l.gen] = 1;
  };
  for (const Word& w : gens) mark(w);
  mark(f);
  std::vector<std::size_t> active;
  for (std::size_t g = 0; g < rank; ++g) {
    if (occurs[g]) active.push_back(g);
  }

  SeparabilityReport report;
  report.generators.assign(gens.begin(), gens.end());
  report.excluded = f;

  const int nthreads = resolve_threads(threads);
  for (const FiniteGroup& target : targets) {
    const std::uint64_t m = target.order();
    const std::uint64_t total = checked_pow(target, m, active.size(), budget);

    auto hom_at = [&](std::uint64_t idx) {
      Homomorphism h{target, std::vector<GroupElement>(rank, target.identity())};
      for (std::size_t i = active.size(); i-- > 0;) {
        h.images[active[i]] = target.element_at(idx % m);
        idx /= m;
      }
      return h;
    };
    auto separates = [&](const Homomorphism& h) {
      std::vector<GroupElement> gen_images;
      gen_images.reserve(gens.size());
      for (const Word& w : gens) gen_images.push_back(evaluate(h, w));
      return closure(target, gen_images).count(evaluate(h, f)) == 0;
    };

    // chunked by the leading image; counts merged, first witness = least index
    const std::uint64_t nchunks = active.empty() ? 1 : m;
    const std::uint64_t chunk_size = total / nchunks;
    std::vector<std::uint64_t> counts(nchunks, 0);
    std::vector<std::uint64_t> firsts(nchunks, total);
    parallel_chunks(nchunks, nthreads, [&](std::size_t chunk) {
      const std::uint64_t lo = chunk * chunk_size;
      const std::uint64_t hi = lo + chunk_size;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (separates(hom_at(idx))) {
          ++counts[chunk];
          if (firsts[chunk] == total) firsts[chunk] = idx;
        }
      }
    });

    TargetCount tc{target.name(), total, 0};
    std::uint64_t first = total;
    for (std::size_t c = 0; c < nchunks; ++c) {
      tc.separating += counts[c];
      first = std::min(first, firsts[c]);
    }
    report.homs_total += tc.homs;
    report.homs_separating += tc.separating;
    if (!report.first_separating && first < total) {
      report.first_separating = hom_at(first);
    }
    report.targets.push_back(std::move(tc));
  }
  return report;
}

}  // namespace freesep
