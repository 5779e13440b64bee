#pragma once

// Decorated plumbing graphs: Euler number and genus per vertex, a sign per
// edge, optional arrowheads and multiplicities. Loops and parallel edges are
// allowed.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnor/cfrac.hpp"

namespace milnor {

struct Vertex {
  std::int64_t euler = 0;
  std::int64_t genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  int sign = 1;  // +1 or -1

  bool is_loop() const { return u == v; }
  int other(int x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arrowhead {
  int id = 0;
  int vertex = 0;

  friend bool operator==(const Arrowhead&, const Arrowhead&) = default;
};

class PlumbingGraph {
 public:
  int add_vertex(std::int64_t euler, std::int64_t genus = 0);
  void add_vertex_with_id(int id, std::int64_t euler, std::int64_t genus = 0);
  /// Returns the edge index.
  std::size_t add_edge(int u, int v, int sign = 1);
  int add_arrowhead(int vertex);
  void add_arrowhead_with_id(int id, int vertex);
  void set_multiplicity(int id, std::int64_t m) { mults_[id] = m; }

  void remove_vertex(int id);  // drops incident edges and arrowheads
  void remove_edge(std::size_t index);
  Vertex& vertex(int id) { return vertices_.at(id); }
  Edge& edge(std::size_t index) { return edges_.at(index); }
  void clear_arrowheads();
  void clear_multiplicities() { mults_.clear(); }

  const std::map<int, Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int id) const { return vertices_.at(id); }
  bool has_vertex(int id) const { return vertices_.count(id) != 0; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arrowhead>& arrowheads() const { return arrows_; }
  const std::map<int, std::int64_t>& multiplicities() const { return mults_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// delta_v: edge ends at v, a loop counting twice. Arrowheads excluded.
  int degree(int id) const;
  /// Incident edge indices; a loop appears once.
  std::vector<std::size_t> incident(int id) const;
  int loop_count(int id) const;
  /// Connected components as sorted vertex id lists, ordered by smallest id.
  std::vector<std::vector<int>> components() const;
  /// Subgraph induced on the given vertices (arrowheads and multiplicities kept when their vertex is).
  PlumbingGraph induced(const std::vector<int>& ids) const;
  int next_id() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::map<int, Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Arrowhead> arrows_;
  std::map<int, std::int64_t> mults_;
};

/// Copy with arrowheads and multiplicities dropped.
PlumbingGraph without_arrowheads(const PlumbingGraph& g);

/// Vertices where e_v m_v + sum_w eps_vw m_w != 0 (arrowhead neighbours
/// included). Throws MissingMultiplicities.
std::vector<int> check_multiplicity_system(const PlumbingGraph& g);

bool is_regular_node(const PlumbingGraph& g, int v);
bool is_special_node(const PlumbingGraph& g, int v);

struct NodeGraph {
  struct Link {
    int a = 0;  // a <= b
    int b = 0;
    std::vector<std::int64_t> eulers;  // interior Euler numbers read from a to b
    std::vector<int> path;             // interior vertex ids, same order
  };
  std::vector<int> nodes;
  std::vector<Link> links;

  /// Number of links at a node, a loop counted twice.
  int valency(int node) const;
};

NodeGraph regular_node_graph(const PlumbingGraph& g);
NodeGraph special_node_graph(const PlumbingGraph& g);

/// (a, b), a >= b >= 1, when the node graph with parallel links collapsed is K_{a,b}.
std::optional<std::pair<int, int>> is_complete_bipartite(const NodeGraph& n);

struct HomologyData {
  std::int64_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  friend bool operator==(const HomologyData&, const HomologyData&) = default;
};

/// Integer invariant factors (nonzero diagonal of the Smith form).
std::vector<BigInt> invariant_factors(std::vector<std::vector<BigInt>> m);

/// H_1 of the plumbed manifold: Z^{2 sum g + b_1(graph) + nullity(A)} plus coker(A)
/// torsion, A the intersection matrix (a loop adds 2 eps on the diagonal).
HomologyData first_homology(const PlumbingGraph& g);

/// R0-canonical signs: a spanning-forest edge is +, every other edge keeps its
/// cycle sign product. Idempotent.
PlumbingGraph canonical_signs(const PlumbingGraph& g);

/// Decorated multigraph isomorphism up to R0 resigning. Arrowheads and
/// multiplicities are ignored. The witness maps vertex ids of g1 to g2.
std::optional<std::map<int, int>> is_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2);

std::string to_dot(const PlumbingGraph& g);

}  // namespace milnor
