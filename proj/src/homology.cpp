#include <algorithm>
#include <map>

#include "milnor/plumbing.hpp"

namespace milnor {

std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero |entry| of the trailing block goes to (t, t).
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool left = false;  // a remainder survived in row or column t
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        left |= m[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        left |= m[t][j] != 0;
      }
      if (left) continue;

      // The pivot must divide the rest of the block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

HomologyData first_homology(const PlumbingGraph& g) {
  std::map<int, std::size_t> index;
  for (const auto& [id, v] : g.vertices()) index.emplace(id, index.size());
  const std::size_t n = index.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  std::int64_t genus = 0;
  for (const auto& [id, v] : g.vertices()) {
    a[index[id]][index[id]] = v.euler;
    genus += v.genus;
  }
  for (const auto& e : g.edges()) {
    const std::size_t i = index.at(e.u);
    const std::size_t j = index.at(e.v);
    if (i == j) {
      a[i][i] += 2 * e.sign;
    } else {
      a[i][j] += e.sign;
      a[j][i] += e.sign;
    }
  }
  const auto factors = invariant_factors(a);
  const auto cycles = static_cast<std::int64_t>(g.edges().size()) - static_cast<std::int64_t>(n) +
                      static_cast<std::int64_t>(g.components().size());
  HomologyData out;
  out.betti = 2 * genus + cycles + static_cast<std::int64_t>(n - factors.size());
  for (const auto& f : factors)
    if (f > 1) out.torsion.push_back(f);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace milnor
