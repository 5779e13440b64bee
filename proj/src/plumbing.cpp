#include "milnor/plumbing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "milnor/error.hpp"
#include "milnor/isomorphism.hpp"

namespace milnor {

int PlumbingGraph::next_id() const {
  int id = vertices_.empty() ? 1 : vertices_.rbegin()->first + 1;
  for (const auto& a : arrows_) id = std::max(id, a.id + 1);
  return id;
}

int PlumbingGraph::add_vertex(std::int64_t euler, std::int64_t genus) {
  const int id = next_id();
  add_vertex_with_id(id, euler, genus);
  return id;
}

void PlumbingGraph::add_vertex_with_id(int id, std::int64_t euler, std::int64_t genus) {
  if (genus < 0) throw Error(ErrorCode::DomainError, "negative genus");
  if (!vertices_.emplace(id, Vertex{euler, genus}).second)
    throw Error(ErrorCode::DomainError, "duplicate vertex id " + std::to_string(id));
}

std::size_t PlumbingGraph::add_edge(int u, int v, int sign) {
  if (!has_vertex(u) || !has_vertex(v))
    throw Error(ErrorCode::DomainError, "edge endpoint is not a vertex");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::DomainError, "edge sign must be +1 or -1");
  edges_.push_back({std::min(u, v), std::max(u, v), sign});
  return edges_.size() - 1;
}

int PlumbingGraph::add_arrowhead(int vertex) {
  const int id = next_id();
  add_arrowhead_with_id(id, vertex);
  return id;
}

void PlumbingGraph::add_arrowhead_with_id(int id, int vertex) {
  if (!has_vertex(vertex)) throw Error(ErrorCode::DomainError, "arrowhead on a missing vertex");
  if (has_vertex(id)) throw Error(ErrorCode::DomainError, "arrowhead id clashes with a vertex");
  for (const auto& a : arrows_)
    if (a.id == id) throw Error(ErrorCode::DomainError, "duplicate arrowhead id");
  arrows_.push_back({id, vertex});
}

void PlumbingGraph::remove_vertex(int id) {
  vertices_.erase(id);
  std::erase_if(edges_, [id](const Edge& e) { return e.u == id || e.v == id; });
  for (const auto& a : arrows_)
    if (a.vertex == id) mults_.erase(a.id);
  std::erase_if(arrows_, [id](const Arrowhead& a) { return a.vertex == id; });
  mults_.erase(id);
}

void PlumbingGraph::remove_edge(std::size_t index) {
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
}

void PlumbingGraph::clear_arrowheads() {
  for (const auto& a : arrows_) mults_.erase(a.id);
  arrows_.clear();
}

int PlumbingGraph::degree(int id) const {
  int deg = 0;
  for (const auto& e : edges_) {
    if (e.u == id) ++deg;
    if (e.v == id) ++deg;
  }
  return deg;
}

std::vector<std::size_t> PlumbingGraph::incident(int id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == id || edges_[i].v == id) out.push_back(i);
  return out;
}

int PlumbingGraph::loop_count(int id) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.u == id && e.v == id; }));
}

std::vector<std::vector<int>> PlumbingGraph::components() const {
  std::map<int, int> parent;
  for (const auto& [id, v] : vertices_) parent[id] = id;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges_) parent[find(e.u)] = find(e.v);
  std::map<int, std::vector<int>> groups;
  for (const auto& [id, v] : vertices_) groups[find(id)].push_back(id);
  std::vector<std::vector<int>> out;
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  std::sort(out.begin(), out.end());
  return out;
}

PlumbingGraph PlumbingGraph::induced(const std::vector<int>& ids) const {
  std::set<int> keep(ids.begin(), ids.end());
  PlumbingGraph out;
  for (int id : keep) out.add_vertex_with_id(id, vertex(id).euler, vertex(id).genus);
  for (const auto& e : edges_)
    if (keep.count(e.u) && keep.count(e.v)) out.edges_.push_back(e);
  for (const auto& a : arrows_)
    if (keep.count(a.vertex)) out.arrows_.push_back(a);
  for (const auto& [id, m] : mults_) {
    const bool arrow_kept = std::any_of(out.arrows_.begin(), out.arrows_.end(),
                                        [id = id](const Arrowhead& a) { return a.id == id; });
    if (keep.count(id) || arrow_kept) out.mults_[id] = m;
  }
  return out;
}

PlumbingGraph without_arrowheads(const PlumbingGraph& g) {
  PlumbingGraph out = g;
  out.clear_arrowheads();
  out.clear_multiplicities();
  return out;
}

std::vector<int> check_multiplicity_system(const PlumbingGraph& g) {
  const auto& m = g.multiplicities();
  for (const auto& [id, v] : g.vertices())
    if (!m.count(id)) throw Error(ErrorCode::MissingMultiplicities, "vertex " + std::to_string(id));
  for (const auto& a : g.arrowheads())
    if (!m.count(a.id)) throw Error(ErrorCode::MissingMultiplicities, "arrowhead " + std::to_string(a.id));

  std::map<int, std::int64_t> total;
  for (const auto& [id, v] : g.vertices()) total[id] = v.euler * m.at(id);
  for (const auto& e : g.edges()) {
    total[e.u] += e.sign * m.at(e.v);
    total[e.v] += e.sign * m.at(e.u);
  }
  // Arrowhead edges are positive.
  for (const auto& a : g.arrowheads()) total[a.vertex] += m.at(a.id);
  std::vector<int> bad;
  for (const auto& [id, t] : total)
    if (t != 0) bad.push_back(id);
  return bad;
}

bool is_regular_node(const PlumbingGraph& g, int v) {
  return g.degree(v) >= 3 || g.vertex(v).genus != 0;
}

bool is_special_node(const PlumbingGraph& g, int v) {
  if (g.degree(v) != 2 || g.loop_count(v) != 0) return false;
  const auto inc = g.incident(v);
  const int x = g.edges()[inc[0]].other(v);
  const int y = g.edges()[inc[1]].other(v);
  if (x == y) return false;
  for (int w : {x, y}) {
    const auto& vw = g.vertex(w);
    if (vw.genus != 0 || vw.euler != -1) return false;
  }
  return true;
}

int NodeGraph::valency(int node) const {
  int count = 0;
  for (const auto& l : links) count += (l.a == node) + (l.b == node);
  return count;
}

namespace {

NodeGraph node_graph(const PlumbingGraph& g, const std::function<bool(int)>& is_node) {
  NodeGraph out;
  std::set<int> nodes;
  for (const auto& [id, v] : g.vertices())
    if (is_node(id)) nodes.insert(id);
  out.nodes.assign(nodes.begin(), nodes.end());

  std::vector<bool> used(g.edges().size(), false);
  for (int start : out.nodes) {
    for (std::size_t first : g.incident(start)) {
      if (used[first]) continue;
      used[first] = true;
      NodeGraph::Link link;
      int prev = start;
      std::size_t via = first;
      int cur = g.edges()[first].other(start);
      bool dangling = false;
      while (!nodes.count(cur)) {
        link.path.push_back(cur);
        link.eulers.push_back(g.vertex(cur).euler);
        std::optional<std::size_t> next;
        for (std::size_t e : g.incident(cur))
          if (e != via) next = e;
        if (!next || g.degree(cur) != 2) {
          dangling = true;
          break;
        }
        used[*next] = true;
        prev = cur;
        via = *next;
        cur = g.edges()[*next].other(prev);
      }
      if (dangling) continue;
      link.a = start;
      link.b = cur;
      if (link.b < link.a) {
        std::swap(link.a, link.b);
        std::reverse(link.eulers.begin(), link.eulers.end());
        std::reverse(link.path.begin(), link.path.end());
      }
      out.links.push_back(std::move(link));
    }
  }
  return out;
}

}  // namespace

NodeGraph regular_node_graph(const PlumbingGraph& g) {
  return node_graph(g, [&](int v) { return is_regular_node(g, v); });
}

NodeGraph special_node_graph(const PlumbingGraph& g) {
  return node_graph(g, [&](int v) { return is_regular_node(g, v) || is_special_node(g, v); });
}

std::optional<std::pair<int, int>> is_complete_bipartite(const NodeGraph& n) {
  if (n.nodes.size() < 2) return std::nullopt;
  std::map<int, std::set<int>> adj;
  for (int v : n.nodes) adj[v];
  for (const auto& l : n.links) {
    if (l.a == l.b) return std::nullopt;
    adj[l.a].insert(l.b);
    adj[l.b].insert(l.a);
  }
  std::map<int, int> side;
  std::vector<int> stack{n.nodes.front()};
  side[n.nodes.front()] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      auto it = side.find(w);
      if (it == side.end()) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (it->second == side[v]) {
        return std::nullopt;
      }
    }
  }
  if (side.size() != n.nodes.size()) return std::nullopt;
  int a = 0, b = 0;
  for (const auto& [v, s] : side) (s == 0 ? a : b)++;
  for (const auto& [v, s] : side) {
    if (static_cast<int>(adj[v].size()) != (s == 0 ? b : a)) return std::nullopt;
  }
  if (a < b) std::swap(a, b);
  if (b < 1) return std::nullopt;
  return std::pair{a, b};
}

PlumbingGraph canonical_signs(const PlumbingGraph& g) {
  std::map<int, int> potential;
  std::map<int, std::vector<std::size_t>> inc;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    inc[g.edges()[i].u].push_back(i);
    if (!g.edges()[i].is_loop()) inc[g.edges()[i].v].push_back(i);
  }
  for (const auto& [root, v] : g.vertices()) {
    if (potential.count(root)) continue;
    potential[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int x = queue[q];
      for (std::size_t e : inc[x]) {
        const int y = g.edges()[e].other(x);
        if (potential.count(y)) continue;
        potential[y] = potential[x] * g.edges()[e].sign;
        queue.push_back(y);
      }
    }
  }
  PlumbingGraph out = g;
  for (std::size_t i = 0; i < out.edges().size(); ++i) {
    Edge& e = out.edge(i);
    if (!e.is_loop()) e.sign *= potential[e.u] * potential[e.v];
  }
  return out;
}

std::optional<std::map<int, int>> is_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edges().size() != g2.edges().size())
    return std::nullopt;

  struct Prepared {
    std::vector<int> ids;
    std::map<int, int> index;
    LabeledGraph lg;
    // Per unordered pair: (#positive, #negative).
    std::map<std::pair<int, int>, std::pair<int, int>> signs;
  };
  std::map<std::tuple<std::int64_t, std::int64_t, int, int>, std::int64_t> colour_ids;
  auto prepare = [&](const PlumbingGraph& g) {
    Prepared p;
    for (const auto& [id, v] : g.vertices()) {
      p.index[id] = static_cast<int>(p.ids.size());
      p.ids.push_back(id);
    }
    p.lg = LabeledGraph(p.ids.size());
    std::map<int, std::pair<int, int>> loops;
    for (const auto& e : g.edges()) {
      const int a = p.index[e.u];
      const int b = p.index[e.v];
      if (a == b) {
        (e.sign > 0 ? loops[a].first : loops[a].second)++;
        continue;
      }
      ++p.lg.label[a][b];
      ++p.lg.label[b][a];
      auto& s = p.signs[{std::min(a, b), std::max(a, b)}];
      (e.sign > 0 ? s.first : s.second)++;
    }
    for (std::size_t i = 0; i < p.ids.size(); ++i) {
      const auto& v = g.vertex(p.ids[i]);
      const auto key = std::tuple{v.euler, v.genus, loops[static_cast<int>(i)].first,
                                  loops[static_cast<int>(i)].second};
      auto [it, inserted] = colour_ids.emplace(key, static_cast<std::int64_t>(colour_ids.size()));
      p.lg.color[i] = it->second;
    }
    return p;
  };
  const Prepared p1 = prepare(g1);
  const Prepared p2 = prepare(g2);

  // The bijection must admit a vertex signing t with
  // signs1(u,v) == t_u t_v * signs2(phi u, phi v) for every pair.
  auto signs_match = [&](const std::vector<int>& map) {
    const std::size_t n = map.size();
    std::vector<std::vector<std::pair<int, int>>> constraint(n);
    for (const auto& [pair, s1] : p1.signs) {
      const int a = map[pair.first];
      const int b = map[pair.second];
      const auto s2 = p2.signs.at({std::min(a, b), std::max(a, b)});
      const bool same = s1 == s2;
      const bool flipped = s1 == std::pair{s2.second, s2.first};
      if (!same && !flipped) return false;
      if (same && flipped) continue;
      const int parity = same ? 1 : -1;
      constraint[pair.first].emplace_back(pair.second, parity);
      constraint[pair.second].emplace_back(pair.first, parity);
    }
    std::vector<int> t(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
      if (t[root] != 0) continue;
      t[root] = 1;
      std::vector<int> stack{static_cast<int>(root)};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [y, parity] : constraint[x]) {
          const int want = t[x] * parity;
          if (t[y] == 0) {
            t[y] = want;
            stack.push_back(y);
          } else if (t[y] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto map = find_isomorphism(p1.lg, p2.lg, signs_match);
  if (!map) return std::nullopt;
  std::map<int, int> witness;
  for (std::size_t i = 0; i < map->size(); ++i) witness[p1.ids[i]] = p2.ids[(*map)[i]];
  return witness;
}

std::string to_dot(const PlumbingGraph& g) {
  if (g.empty()) return "graph G {}";
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& [id, v] : g.vertices())
    os << "  n" << id << " [label=\"e=" << v.euler << ",g=" << v.genus << "\"];\n";
  for (const auto& a : g.arrowheads()) os << "  a" << a.id << " [shape=point];\n";
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v, x.sign) < std::tie(y.u, y.v, y.sign);
  });
  for (const auto& e : edges) {
    os << "  n" << e.u << " -- n" << e.v;
    if (e.sign < 0) os << " [style=dashed]";
    os << ";\n";
  }
  for (const auto& a : g.arrowheads()) os << "  n" << a.vertex << " -- a" << a.id << " [dir=forward];\n";
  os << "}\n";
  return os.str();
}

}  // namespace milnor
