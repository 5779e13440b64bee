#pragma once

// Random small plumbing graphs and the list of moves that apply to them.
// Shared by the unit tests and the acceptance run.

#include <random>
#include <string>
#include <vector>

#include "milnor/calculus.hpp"

namespace testing_support {

using milnor::Move;
using milnor::PlumbingGraph;

// First word of describe(m).
inline std::string tag(const Move& m) {
  const auto s = milnor::describe(m);
  return s.substr(0, s.find(' '));
}

inline PlumbingGraph random_graph(std::mt19937_64& rng, int max_vertices = 12) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto sign = [&] { return pick(0, 1) ? 1 : -1; };
  PlumbingGraph g;
  const int n = pick(1, max_vertices - 2);
  for (int i = 0; i < n; ++i) g.add_vertex(pick(-4, 3), pick(0, 5) == 0 ? pick(1, 2) : 0);
  // A forest plus a few extra edges and loops.
  for (int i = 2; i <= n; ++i)
    if (pick(0, 6)) g.add_edge(pick(1, i - 1), i, sign());
  for (int k = pick(0, 2); k > 0; --k) g.add_edge(pick(1, n), pick(1, n), sign());
  // Plant the shapes the reducing moves look for.
  switch (pick(0, 4)) {
    case 0: {  // 0-vertex on two edges of opposite sign to one vertex
      const int u = pick(1, n);
      const int z = g.add_vertex(0, 0);
      g.add_edge(u, z, 1);
      g.add_edge(u, z, -1);
      break;
    }
    case 1: {  // 0-leaf
      g.add_edge(pick(1, n), g.add_vertex(0, 0), sign());
      break;
    }
    case 2: {  // 0-vertex between two vertices
      const int u = pick(1, n);
      const int w = pick(1, n);
      if (u != w) {
        const int z = g.add_vertex(0, 0);
        g.add_edge(u, z, sign());
        g.add_edge(z, w, sign());
      }
      break;
    }
    case 3: {  // +-1 string vertex
      const int u = pick(1, n);
      const int x = g.add_vertex(sign(), 0);
      g.add_edge(u, x, sign());
      if (pick(0, 1)) g.add_edge(x, pick(1, n), sign());
      break;
    }
    default: break;
  }
  return g;
}

/// Every applicable move of each kind, with random parameters where the
/// move has a free choice (Extrude0).
inline std::vector<Move> applicable_moves(const PlumbingGraph& g, std::mt19937_64& rng) {
  namespace mv = milnor::move;
  std::vector<Move> cand;
  cand.push_back(mv::BlowUpVertex{0, 1});
  cand.push_back(mv::BlowUpVertex{0, -1});
  for (const auto& [id, v] : g.vertices()) {
    cand.push_back(mv::Resign{id});
    cand.push_back(mv::BlowDown{id});
    cand.push_back(mv::Absorb0{id});
    cand.push_back(mv::Handle5{id});
    cand.push_back(mv::Split6{id});
    cand.push_back(mv::BlowUpVertex{id, 1});
    cand.push_back(mv::BlowUpVertex{id, -1});
    std::vector<std::size_t> edges;
    for (auto e : g.incident(id))
      if (!g.edges()[e].is_loop() && rng() % 2) edges.push_back(e);
    const auto genus = static_cast<std::int64_t>(rng() % static_cast<unsigned>(v.genus + 1));
    cand.push_back(mv::Extrude0{id, static_cast<std::int64_t>(rng() % 5) - 2, genus, edges});
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    cand.push_back(mv::BlowUpEdge{e, 1});
    cand.push_back(mv::BlowUpEdge{e, -1});
  }
  std::vector<Move> out;
  for (auto& m : cand)
    if (!milnor::why_not_applicable(g, m)) out.push_back(std::move(m));
  return out;
}

}  // namespace testing_support
