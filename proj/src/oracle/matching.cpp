#include "bifurcate/oracle/matching.hpp"

#include <algorithm>
#include <numeric>

#include "bifurcate/oracle/caps.hpp"
#include "bifurcate/oracle/selection.hpp"

namespace bifurcate::oracle {

namespace {

bool match_rest(const Adjacency& adj, std::vector<char>& used) {
  const auto free = std::find(used.begin(), used.end(), 0);
  if (free == used.end()) return true;
  const std::size_t v = static_cast<std::size_t>(free - used.begin());
  used[v] = 1;
  for (std::size_t u : adj[v]) {
    if (used[u]) continue;
    used[u] = 1;
    if (match_rest(adj, used)) return true;
    used[u] = 0;
  }
  used[v] = 0;
  return false;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Blossom {
  const Adjacency& adj;
  std::size_t n;
  std::vector<std::size_t> match, parent, base;
  std::vector<char> used, in_blossom;
  std::vector<std::size_t> queue;

  explicit Blossom(const Adjacency& g) : adj(g), n(g.size()), match(n, kNone) {}

  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == kNone) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    used.assign(n, 0);
    parent.assign(n, kNone);
    base.resize(n);
    std::iota(base.begin(), base.end(), std::size_t{0});
    used[root] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != kNone && parent[match[to]] != kNone)) {
          const std::size_t cur = lca(v, to);
          in_blossom.assign(n, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == kNone) {
          parent[to] = v;
          if (match[to] == kNone) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t run() {
    std::size_t size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (match[v] != kNone) continue;
      std::size_t end = find_path(v);
      if (end == kNone) continue;
      ++size;
      while (end != kNone) {
        const std::size_t pv = parent[end], next = match[pv];
        match[end] = pv;
        match[pv] = end;
        end = next;
      }
    }
    return size;
  }
};

}  // namespace

bool has_perfect_matching_exhaustive(const Adjacency& adj) {
  require_cap(adj.size(), kMaxExhaustiveMatching, "exhaustive matching vertex count");
  if (adj.size() % 2 != 0) return false;
  std::vector<char> used(adj.size(), 0);
  return match_rest(adj, used);
}

std::size_t blossom_matching_size(const Adjacency& adj) { return Blossom(adj).run(); }

Adjacency disk_graph(const problems::MatchingInstance& inst, double r) {
  const std::size_t n = inst.disks().size();
  const problems::PlanarObjects objects(inst.disks());
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (selection_critical(objects, inst.mode(), i, j) <= r) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

bool matching_decide(const problems::MatchingInstance& inst, double r) {
  const Adjacency adj = disk_graph(inst, r);
  if (adj.size() <= kMaxExhaustiveMatching) return has_perfect_matching_exhaustive(adj);
  return 2 * blossom_matching_size(adj) == adj.size();
}

double matching_solve(const problems::MatchingInstance& inst) {
  const std::size_t n = inst.disks().size();
  require_cap(static_cast<std::uint64_t>(n) * (n - 1) / 2, kMaxPairs, "matching pair count");
  if (matching_decide(inst, 0.0)) return 0.0;
  const problems::PlanarObjects objects(inst.disks());
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(selection_critical(objects, inst.mode(), i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t at = first_true(values.size(), [&](std::size_t i) { return matching_decide(inst, values[i]); });
  if (at == values.size()) throw InternalError("matching oracle: no perfect matching at any critical");
  return values[at];
}

}  // namespace bifurcate::oracle
