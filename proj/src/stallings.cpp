#include "stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace freesep {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

using EdgeList = std::vector<std::pair<int, std::size_t>>;  // (direction, target)

}  // namespace

SubgroupGraph SubgroupGraph::build(const Alphabet& alphabet, std::span<const Word> generators) {
  const int dirs = 2 * alphabet.rank();

  // Wedge of loops at the basepoint, one per generator word.
  std::vector<EdgeList> adj(1);
  auto add_edge = [&adj](std::size_t u, Letter l, std::size_t v) {
    const int d = SubgroupGraph::direction(l);
    adj[u].push_back({d, v});
    adj[v].push_back({d ^ 1, u});
  };
  for (const Word& w : generators) {
    if (w.empty()) continue;
    std::size_t cur = 0;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      std::size_t next = 0;
      if (i + 1 != ls.size()) {
        adj.emplace_back();
        next = adj.size() - 1;
      }
      add_edge(cur, ls[i], next);
      cur = next;
    }
  }

  // Fold: merge the targets of equally-labelled edges until deterministic.
  UnionFind uf(adj.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (uf.find(v) != v || adj[v].empty()) continue;
      EdgeList edges;
      edges.reserve(adj[v].size());
      for (auto [d, t] : adj[v]) edges.push_back({d, uf.find(t)});
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      bool merged = false;
      for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i].first != edges[i + 1].first) continue;
        std::size_t a = uf.find(edges[i].second);
        std::size_t b = uf.find(edges[i + 1].second);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        uf.parent[b] = a;
        adj[a].insert(adj[a].end(), adj[b].begin(), adj[b].end());
        adj[b].clear();
        merged = true;
        changed = true;
        break;
      }
      if (!merged) adj[v] = std::move(edges);
    }
  }

  const std::size_t base = uf.find(0);

  // Deterministic transition map per surviving vertex.
  std::vector<std::vector<std::size_t>> trans(adj.size(), std::vector<std::size_t>(dirs, npos));
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (uf.find(v) != v) continue;
    for (auto [d, t] : adj[v]) trans[v][d] = uf.find(t);
  }

  // Trim hair: drop non-basepoint vertices of degree <= 1 until stable.
  auto degree = [&](std::size_t v) {
    std::size_t deg = 0;
    for (int d = 0; d < dirs; ++d) deg += trans[v][d] != npos;
    return deg;
  };
  std::vector<char> alive(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) alive[v] = uf.find(v) == v;
  std::deque<std::size_t> prune;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (alive[v] && v != base && degree(v) <= 1) prune.push_back(v);
  }
  while (!prune.empty()) {
    std::size_t v = prune.front();
    prune.pop_front();
    if (!alive[v] || v == base || degree(v) > 1) continue;
    alive[v] = 0;
    for (int d = 0; d < dirs; ++d) {
      std::size_t t = trans[v][d];
      if (t == npos) continue;
      trans[v][d] = npos;
      if (trans[t][d ^ 1] == v) trans[t][d ^ 1] = npos;
      if (alive[t] && t != base && degree(t) <= 1) prune.push_back(t);
    }
  }

  // Canonical BFS numbering from the basepoint, directions in letter order.
  std::vector<std::size_t> number(adj.size(), npos);
  std::vector<std::size_t> order;
  number[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t v = order[i];
    for (int d = 0; d < dirs; ++d) {
      std::size_t t = trans[v][d];
      if (t != npos && alive[t] && number[t] == npos) {
        number[t] = order.size();
        order.push_back(t);
      }
    }
  }

  std::vector<std::vector<std::size_t>> table(order.size(), std::vector<std::size_t>(dirs, npos));
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t v = order[i];
    for (int d = 0; d < dirs; ++d) {
      std::size_t t = trans[v][d];
      if (t != npos && number[t] != npos) table[i][d] = number[t];
    }
  }
  return SubgroupGraph(alphabet, std::move(table));
}

bool SubgroupGraph::contains(const Word& w) const {
  std::size_t cur = 0;
  for (Letter l : w.letters()) {
    cur = step(cur, l);
    if (cur == npos) return false;
  }
  return cur == 0;
}

std::optional<std::size_t> SubgroupGraph::finite_index() const {
  for (const auto& row : table_) {
    for (std::size_t t : row) {
      if (t == npos) return std::nullopt;
    }
  }
  return table_.size();
}

std::size_t PermutationRep::apply(std::size_t point, const Word& w) const {
  std::vector<std::vector<std::size_t>> inv(images.size());
  for (std::size_t g = 0; g < images.size(); ++g) {
    inv[g].assign(degree, 0);
    for (std::size_t i = 0; i < degree; ++i) inv[g][images[g][i]] = i;
  }
  for (Letter l : w.letters()) {
    point = l.sign > 0 ? images[l.gen][point] : inv[l.gen][point];
  }
  return point;
}

bool PermutationRep::valid() const {
  for (const auto& perm : images) {
    if (perm.size() != degree) return false;
    std::vector<char> hit(degree, 0);
    for (std::size_t t : perm) {
      if (t >= degree || hit[t]) return false;
      hit[t] = 1;
    }
  }
  return true;
}

PermutationRep separating_permutation_rep(const SubgroupGraph& g, const Word& f) {
  if (g.contains(f)) {
    throw PreconditionError("not separable from a member: the word lies in the subgroup");
  }
  const int rank = g.rank();
  const int dirs = 2 * rank;
  auto trans = g.table();

  // Adjoin the path of f; each missing transition opens a fresh vertex, so the
  // graph stays folded.
  std::size_t cur = 0;
  for (Letter l : f.letters()) {
    const int d = SubgroupGraph::direction(l);
    std::size_t t = trans[cur][d];
    if (t == SubgroupGraph::npos) {
      t = trans.size();
      trans.emplace_back(dirs, SubgroupGraph::npos);
      trans[cur][d] = t;
      trans[t][d ^ 1] = cur;
    }
    cur = t;
  }
  const std::size_t endpoint = cur;
  const std::size_t n = trans.size();

  // Complete each partial injection v -> v.g to a permutation by pairing
  // unmatched sources with unmatched targets in ascending id order.
  PermutationRep rep;
  rep.degree = n;
  rep.images.assign(static_cast<std::size_t>(rank), {});
  for (int gen = 0; gen < rank; ++gen) {
    auto& perm = rep.images[static_cast<std::size_t>(gen)];
    perm.assign(n, SubgroupGraph::npos);
    std::vector<char> hit(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t t = trans[v][2 * gen];
      if (t != SubgroupGraph::npos) {
        perm[v] = t;
        hit[t] = 1;
      }
    }
    std::size_t next_free = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (perm[v] != SubgroupGraph::npos) continue;
      while (hit[next_free]) ++next_free;
      perm[v] = next_free;
      hit[next_free] = 1;
    }
  }

  if (!rep.valid() || rep.apply(0, f) != endpoint || endpoint == 0) {
    throw std::logic_error("separating_permutation_rep: postcondition failed");
  }
  return rep;
}

}  // namespace freesep
