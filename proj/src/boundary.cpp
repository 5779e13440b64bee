#include "milnor/boundary.hpp"

#include <numeric>
#include <set>

#include "milnor/calculus.hpp"
#include "milnor/error.hpp"

namespace milnor {

namespace {

void require_d(const Arrangement& arr) {
  if (arr.d() < 2) throw Error(ErrorCode::DomainError, "boundary graphs need d >= 2");
}

int point_id(const Arrangement& arr, int j) { return arr.d() + 1 + j; }

std::int64_t point_genus(std::int64_t c, std::int64_t n) {
  const std::int64_t twice = (c - 1) * (n - 2);
  if (twice % 2 != 0)
    throw Error(ErrorCode::InconsistentRecursion,
                "non-integral genus for c=" + std::to_string(c) + " n=" + std::to_string(n));
  return twice / 2;
}

}  // namespace

ConfigGraph build_config_graph(const Arrangement& arr) {
  require_d(arr);
  const int d = arr.d();
  ConfigGraph cg;
  for (int i = 1; i <= d; ++i) cg.nodes.push_back({ConfigGraph::Kind::Line, i, {1, d, 1}, 0});
  for (int j = 0; j < arr.point_count(); ++j)
    cg.nodes.push_back({ConfigGraph::Kind::Point, j, {arr.lines_through(j), d, 1}, 0});
  for (int j = 0; j < arr.point_count(); ++j)
    for (int line : arr.point(j)) cg.links.push_back({line - 1, d + j, 2});
  for (int i = 1; i <= d; ++i) {
    cg.nodes.push_back({ConfigGraph::Kind::Arrow, i, {1, 0, 1}, 0});
    cg.links.push_back({i - 1, static_cast<int>(cg.nodes.size()) - 1, 1});
  }
  return cg;
}

PlumbingGraph build_gnsz(const Arrangement& arr) {
  require_d(arr);
  const std::int64_t d = arr.d();
  PlumbingGraph g;
  for (int i = 1; i <= d; ++i) {
    g.add_vertex_with_id(i, arr.points_on_line(i) - 1, 0);
    g.set_multiplicity(i, 1);
  }

  std::vector<StringData> strings(arr.point_count());
  for (int j = 0; j < arr.point_count(); ++j) {
    const std::int64_t n = arr.lines_through(j);
    const std::int64_t c = arr.point_gcd(j);
    std::int64_t neighbor = 1;
    if (n < d) {
      strings[j] = string_multiplicities(d, n);
      neighbor = strings[j].neighbor_mult;
    }
    g.add_vertex_with_id(point_id(arr, j), neighbor * c, point_genus(c, n));
    g.set_multiplicity(point_id(arr, j), n / c);
  }

  for (int j = 0; j < arr.point_count(); ++j) {
    const int w = point_id(arr, j);
    for (int line : arr.point(j)) {
      if (arr.lines_through(j) == d) {
        g.add_edge(line, w, -1);
        continue;
      }
      int prev = line;
      const auto& s = strings[j];
      for (std::size_t l = 0; l < s.eulers.size(); ++l) {
        const int y = g.add_vertex(s.eulers[l], 0);
        g.set_multiplicity(y, s.mults[l + 1]);
        g.add_edge(prev, y, -1);
        prev = y;
      }
      g.add_edge(prev, w, -1);
    }
  }

  for (int i = 1; i <= d; ++i) {
    const int a = g.add_arrowhead(i);
    g.set_multiplicity(a, 1);
  }
  return g;
}

PlumbingGraph build_g(const Arrangement& arr) {
  require_d(arr);
  const std::int64_t d = arr.d();
  for (int j = 0; j < arr.point_count(); ++j)
    if (arr.lines_through(j) == d) throw Error(ErrorCode::DomainError, "build_g: pencil input");

  PlumbingGraph g;
  for (int i = 1; i <= d; ++i) g.add_vertex_with_id(i, -1, 0);
  for (int j = 0; j < arr.point_count(); ++j) {
    const std::int64_t n = arr.lines_through(j);
    const std::int64_t c = arr.point_gcd(j);
    if (n == 2) {
      g.add_vertex_with_id(point_id(arr, j), -d, 0);
    } else {
      const auto s = string_multiplicities(d, n);
      g.add_vertex_with_id(point_id(arr, j), s.neighbor_mult * c - n, point_genus(c, n));
    }
  }
  for (int j = 0; j < arr.point_count(); ++j) {
    const int w = point_id(arr, j);
    const auto& lines = arr.point(j);
    if (lines.size() == 2) {
      g.add_edge(lines[0], w, 1);
      g.add_edge(lines[1], w, -1);
      continue;
    }
    const auto h = expand_ncf(d, arr.lines_through(j)).entries;
    for (int line : lines) {
      int prev = line;
      for (std::int64_t k : h) {
        const int y = g.add_vertex(-k, 0);
        g.add_edge(prev, y, 1);
        prev = y;
      }
      g.add_edge(prev, w, 1);
    }
  }
  return g;
}

namespace {

bool chain_vertex(const PlumbingGraph& g, int v, int d) {
  return v > d && g.vertex(v).genus == 0 && g.degree(v) == 2 && g.loop_count(v) == 0;
}

// One pass over the chain vertices; returns false when nothing applied.
template <class Pred>
bool sweep(PlumbingGraph& g, int d, Pred&& pick) {
  for (const auto& [id, x] : g.vertices()) {
    if (!chain_vertex(g, id, d)) continue;
    if (auto mv = pick(g, id)) {
      g = milnor::apply(g, *mv);
      return true;
    }
  }
  return false;
}

}  // namespace

PlumbingGraph nsz_to_g(const PlumbingGraph& gnsz, const Arrangement& arr) {
  const int d = arr.d();
  const int first_string = d + arr.point_count() + 1;
  PlumbingGraph g = without_arrowheads(gnsz);

  // Negative blow-up on every edge: lines drop to -1, points to m'c - n,
  // string entries k to k - 2 between new -1's.
  const std::size_t edge_count = g.edges().size();
  for (std::size_t i = 0; i < edge_count; ++i) g = milnor::apply(g, move::BlowUpEdge{0, -1});

  // Entries k = 2 are now 0 and get absorbed.
  while (sweep(g, d, [&](const PlumbingGraph& h, int v) -> std::optional<Move> {
    if (v >= first_string && h.vertex(v).euler == 0 && !why_not_applicable(h, move::Absorb0{v}))
      return move::Absorb0{v};
    return std::nullopt;
  })) {
  }

  // Entries k >= 4 are split into k - 2 vertices +1 separated by 0's.
  while (sweep(g, d, [&](const PlumbingGraph& h, int v) -> std::optional<Move> {
    if (v < first_string || h.vertex(v).euler < 2) return std::nullopt;
    return move::Extrude0{v, 1, 0, {h.incident(v)[0]}};
  })) {
  }

  // Blow down the +1's.
  while (sweep(g, d, [&](const PlumbingGraph& h, int v) -> std::optional<Move> {
    if (v >= first_string && h.vertex(v).euler == 1) return move::BlowDown{v};
    return std::nullopt;
  })) {
  }

  // Double points: what is left between two lines collapses to a single -d.
  while (sweep(g, d, [&](const PlumbingGraph& h, int v) -> std::optional<Move> {
    const auto e = h.vertex(v).euler;
    if (e == 1 || e == -1) return move::BlowDown{v};
    if (e == 0 && !why_not_applicable(h, move::Absorb0{v})) return move::Absorb0{v};
    return std::nullopt;
  })) {
  }

  // Make the chains read positively from each line.
  std::set<int> done;
  for (int i = 1; i <= d; ++i) {
    for (std::size_t e0 : g.incident(i)) {
      int prev = i;
      int cur = g.edges()[e0].other(i);
      std::size_t e = e0;
      while (chain_vertex(g, cur, d) && !done.count(cur)) {
        if (g.edges()[e].sign < 0) g = milnor::apply(g, move::Resign{cur});
        done.insert(cur);
        const auto inc = g.incident(cur);
        const std::size_t next = g.edges()[inc[0]].other(cur) == prev ? inc[1] : inc[0];
        prev = cur;
        cur = g.edges()[next].other(cur);
        e = next;
      }
    }
  }
  return g;
}

FiberClasses fiber_classes(const std::vector<std::int64_t>& left,
                           const std::vector<std::int64_t>& right,
                           std::optional<std::int64_t> d) {
  if (left.empty() || right.empty())
    throw Error(ErrorCode::DomainError, "fiber_classes needs two non-empty sides");
  using Vec = std::array<BigInt, 2>;
  const Vec before{0, 1};
  const Vec centre{1, 1};
  const Vec after{1, 0};
  if (before[0] + after[0] != centre[0] || before[1] + after[1] != centre[1])
    throw Error(ErrorCode::InconsistentRecursion, "seed basis violates the -1 relation");

  auto run = [](Vec prev, Vec cur, const std::vector<std::int64_t>& ks) {
    for (std::int64_t k : ks) {
      Vec next{k * cur[0] - prev[0], k * cur[1] - prev[1]};
      prev = cur;
      cur = next;
    }
    return cur;
  };
  FiberClasses out;
  out.right = run(centre, after, right);
  out.left = run(centre, before, left);
  out.det = out.right[0] * out.left[1] - out.right[1] * out.left[0];
  if (d) {
    auto scale = [&](const std::vector<std::int64_t>& ks) {
      const BigInt p = numerator(eval_ncf(ks));
      if (*d % static_cast<std::int64_t>(p) != 0)
        throw Error(ErrorCode::DomainError, "side numerator does not divide d");
      return BigInt(*d) / p;
    };
    out.scaled_det = out.det * scale(left) * scale(right);
  }
  return out;
}

std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> central_string(
    const PlumbingGraph& g) {
  auto walk = [&](int from, int to) -> std::optional<std::vector<std::int64_t>> {
    std::vector<std::int64_t> ks;
    int prev = from;
    int cur = to;
    while (g.degree(cur) == 2 && g.vertex(cur).genus == 0 && g.loop_count(cur) == 0) {
      if (g.vertex(cur).euler == -1) return std::nullopt;
      ks.push_back(-g.vertex(cur).euler);
      const auto inc = g.incident(cur);
      const std::size_t next = g.edges()[inc[0]].other(cur) == prev ? inc[1] : inc[0];
      prev = cur;
      cur = g.edges()[next].other(cur);
      if (cur == from) return std::nullopt;
    }
    if (ks.empty()) return std::nullopt;
    return ks;
  };
  for (const auto& [id, x] : g.vertices()) {
    if (x.euler != -1 || x.genus != 0 || g.degree(id) != 2 || g.loop_count(id) != 0) continue;
    const auto inc = g.incident(id);
    auto l = walk(id, g.edges()[inc[0]].other(id));
    auto r = walk(id, g.edges()[inc[1]].other(id));
    if (l && r) return std::make_pair(*l, *r);
  }
  return std::nullopt;
}

}  // namespace milnor
