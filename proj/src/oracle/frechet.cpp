#include "bifurcate/oracle/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bifurcate/oracle/caps.hpp"

namespace bifurcate::oracle {

namespace {

double dist(const geom::PointSet& a, std::size_t i, const geom::PointSet& b, std::size_t j) {
  double sum = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const double d = a[i][c] - b[j][c];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

bool dfds_decide(const problems::FrechetInstance& inst, double eps) {
  const auto& a = inst.a();
  const auto& b = inst.b();
  const std::size_t n = a.size(), m = b.size();
  require_cap(std::max(n, m), kMaxFrechetLength, "dfds sequence length");
  std::vector<std::vector<char>> reach(n, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (dist(a, i, b, j) > eps) continue;
      if (i == 0 && j == 0) {
        reach[i][j] = 1;
        continue;
      }
      // Predecessor: same i with smaller j, or the previous i with j' <= j.
      bool ok = false;
      for (std::size_t jj = 0; jj < j && !ok; ++jj) ok = reach[i][jj];
      for (std::size_t jj = 0; i > 0 && jj <= j && !ok; ++jj) ok = reach[i - 1][jj];
      reach[i][j] = ok;
    }
  }
  return reach[n - 1][m - 1];
}

double dfds_solve(const problems::FrechetInstance& inst) {
  const auto& a = inst.a();
  const auto& b = inst.b();
  require_cap(std::max(a.size(), b.size()), kMaxFrechetLength, "dfds sequence length");
  std::vector<double> values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) values.push_back(dist(a, i, b, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t at = first_true(values.size(), [&](std::size_t i) { return dfds_decide(inst, values[i]); });
  if (at == values.size()) throw InternalError("dfds oracle: no distance is feasible");
  return values[at];
}

}  // namespace bifurcate::oracle
