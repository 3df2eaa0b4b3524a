#include "bifurcate/oracle/rsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bifurcate/oracle/caps.hpp"

namespace bifurcate::oracle {

namespace {

double dist(const geom::PointSet& p, std::size_t i, std::size_t j) {
  double sum = 0.0;
  for (std::size_t c = 0; c < p.dim(); ++c) {
    const double d = p[i][c] - p[j][c];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

bool rsp_decide(const problems::RspInstance& inst, double r) {
  const auto& p = inst.points();
  const std::size_t n = p.size();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, -1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dist(p, i, j) <= r) w[i][j] = dist(p, i, j);
    }
  }
  const std::size_t s = inst.source(), t = inst.target();
  if (const auto* hops = std::get_if<problems::HopBound>(&inst.bound())) {
    std::vector<std::size_t> level(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> queue{s};
    level[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (w[u][v] >= 0.0 && level[v] == std::numeric_limits<std::size_t>::max()) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return level[t] <= hops->k;
  }
  // O(n^2) Dijkstra without a heap.
  std::vector<double> d(n, std::numeric_limits<double>::infinity());
  std::vector<bool> done(n, false);
  d[s] = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && (u == n || d[v] < d[u])) u = v;
    }
    if (u == n || std::isinf(d[u])) break;
    done[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (w[u][v] >= 0.0) d[v] = std::min(d[v], d[u] + w[u][v]);
    }
  }
  return d[t] <= std::get<problems::LengthBound>(inst.bound()).w;
}

double rsp_solve(const problems::RspInstance& inst) {
  const auto& p = inst.points();
  const std::size_t n = p.size();
  require_cap(static_cast<std::uint64_t>(n) * (n - 1) / 2, kMaxPairs, "udg-rsp pair count");
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(dist(p, i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t at = first_true(values.size(), [&](std::size_t i) { return rsp_decide(inst, values[i]); });
  if (at == values.size()) throw InternalError("udg-rsp oracle: no pairwise distance is feasible");
  return values[at];
}

}  // namespace bifurcate::oracle
