#include "milnor/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace milnor {
namespace {

using Signature = std::tuple<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>>;

struct Adjacency {
  std::vector<std::vector<std::pair<int, std::int64_t>>> out;
};

Adjacency adjacency(const LabeledGraph& g) {
  Adjacency adj;
  adj.out.resize(g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.label[u][v] != 0) adj.out[u].emplace_back(static_cast<int>(v), g.label[u][v]);
  return adj;
}

// Refines both colourings together so the resulting colour ids are
// comparable. Returns false if the colour class sizes diverge.
bool refine(const Adjacency& aa, const Adjacency& ab, std::vector<std::int64_t>& ca,
            std::vector<std::int64_t>& cb) {
  const std::size_t n = ca.size();
  std::size_t classes = 0;
  while (true) {
    std::map<Signature, std::int64_t> ids;
    auto signature = [](const Adjacency& adj, const std::vector<std::int64_t>& c, std::size_t u) {
      std::vector<std::pair<std::int64_t, std::int64_t>> nb;
      nb.reserve(adj.out[u].size());
      for (auto [v, l] : adj.out[u]) nb.emplace_back(l, c[v]);
      std::sort(nb.begin(), nb.end());
      return Signature{c[u], std::move(nb)};
    };
    std::vector<Signature> sa(n), sb(n);
    for (std::size_t u = 0; u < n; ++u) {
      sa[u] = signature(aa, ca, u);
      sb[u] = signature(ab, cb, u);
      ids.emplace(sa[u], 0);
      ids.emplace(sb[u], 0);
    }
    std::int64_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<std::int64_t> count(ids.size(), 0);
    for (std::size_t u = 0; u < n; ++u) {
      ca[u] = ids[sa[u]];
      cb[u] = ids[sb[u]];
      ++count[ca[u]];
      --count[cb[u]];
    }
    if (std::any_of(count.begin(), count.end(), [](std::int64_t x) { return x != 0; })) return false;
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

struct Search {
  const LabeledGraph& a;
  const LabeledGraph& b;
  const MappingPredicate& accept;
  Adjacency aa, ab;

  std::optional<std::vector<int>> run(std::vector<std::int64_t> ca, std::vector<std::int64_t> cb) {
    if (!refine(aa, ab, ca, cb)) return std::nullopt;
    const std::size_t n = ca.size();
    // Smallest non-singleton cell of a.
    std::map<std::int64_t, int> cell_size;
    for (auto c : ca) ++cell_size[c];
    std::int64_t target = -1;
    int best = 0;
    for (auto [c, s] : cell_size) {
      if (s > 1 && (best == 0 || s < best)) {
        best = s;
        target = c;
      }
    }
    if (target < 0) {
      std::vector<int> map(n, -1);
      std::map<std::int64_t, int> where;
      for (std::size_t v = 0; v < n; ++v) where[cb[v]] = static_cast<int>(v);
      for (std::size_t u = 0; u < n; ++u) map[u] = where[ca[u]];
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (a.label[u][v] != b.label[map[u]][map[v]]) return std::nullopt;
      if (accept && !accept(map)) return std::nullopt;
      return map;
    }
    std::size_t pick = 0;
    while (ca[pick] != target) ++pick;
    const std::int64_t fresh = static_cast<std::int64_t>(n) + 1000000;
    for (std::size_t v = 0; v < n; ++v) {
      if (cb[v] != target) continue;
      auto na = ca;
      auto nb = cb;
      na[pick] = fresh;
      nb[v] = fresh;
      if (auto found = run(std::move(na), std::move(nb))) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                                                 const MappingPredicate& accept) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 0) {
    if (accept && !accept({})) return std::nullopt;
    return std::vector<int>{};
  }
  Search s{a, b, accept, adjacency(a), adjacency(b)};
  return s.run(a.color, b.color);
}

}  // namespace milnor
