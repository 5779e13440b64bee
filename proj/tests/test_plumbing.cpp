#include <random>

#include "doctest.h"
#include "milnor/boundary.hpp"
#include "milnor/calculus.hpp"
#include "milnor/error.hpp"
#include "milnor/plumbing.hpp"

using namespace milnor;

namespace {

PlumbingGraph chain(const std::vector<std::int64_t>& eulers, int sign = 1) {
  PlumbingGraph g;
  int prev = 0;
  for (auto e : eulers) {
    const int v = g.add_vertex(e, 0);
    if (prev) g.add_edge(prev, v, sign);
    prev = v;
  }
  return g;
}

// Fraction-free determinant; the test's own oracle for |H_1| of a rational
// homology sphere.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<BigInt>> matrix_of(const PlumbingGraph& g) {
  std::map<int, std::size_t> idx;
  for (const auto& [id, v] : g.vertices()) idx.emplace(id, idx.size());
  std::vector<std::vector<BigInt>> a(idx.size(), std::vector<BigInt>(idx.size(), 0));
  for (const auto& [id, v] : g.vertices()) a[idx[id]][idx[id]] = v.euler;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) a[idx[e.u]][idx[e.u]] += 2 * e.sign;
    else {
      a[idx[e.u]][idx[e.v]] += e.sign;
      a[idx[e.v]][idx[e.u]] += e.sign;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("multiplicity systems") {
  PlumbingGraph single;
  single.add_vertex(0, 0);
  single.set_multiplicity(1, 17);
  CHECK(check_multiplicity_system(single).empty());

  PlumbingGraph star;
  star.add_vertex_with_id(1, 3, 1);
  for (int i = 2; i <= 4; ++i) {
    star.add_vertex_with_id(i, 0, 0);
    star.add_edge(1, i, -1);
  }
  for (int i = 1; i <= 4; ++i) star.set_multiplicity(i, 1);
  for (int i = 2; i <= 4; ++i) {
    const int a = star.add_arrowhead(i);
    star.set_multiplicity(a, 1);
  }
  // Leaves: 0*1 - 1 + 1 (arrowhead) = 0; centre: 3 - 3 = 0.
  CHECK(check_multiplicity_system(star).empty());
  star.vertex(1).euler = 2;
  CHECK(check_multiplicity_system(star) == std::vector<int>{1});

  PlumbingGraph missing;
  missing.add_vertex(1, 0);
  CHECK_THROWS_AS(check_multiplicity_system(missing), Error);
}

TEST_CASE("graph bookkeeping") {
  PlumbingGraph g;
  const int a = g.add_vertex(-1, 0);
  const int b = g.add_vertex(-2, 1);
  g.add_edge(a, b, 1);
  g.add_edge(b, b, -1);
  CHECK(g.degree(a) == 1);
  CHECK(g.degree(b) == 3);
  CHECK(g.loop_count(b) == 1);
  CHECK(g.incident(b).size() == 2);
  CHECK(g.components().size() == 1);
  g.remove_vertex(b);
  CHECK(g.edges().empty());
  CHECK_THROWS_AS(g.add_edge(a, 99, 1), Error);
  CHECK_THROWS_AS(g.add_vertex(0, -1), Error);
  CHECK_THROWS_AS(g.add_vertex_with_id(a, 0, 0), Error);
}

TEST_CASE("homology examples") {
  PlumbingGraph np;
  np.add_vertex(0, 2);
  CHECK(first_homology(np) == HomologyData{5, {}});

  PlumbingGraph pencil;
  for (int i = 0; i < 4; ++i) pencil.add_vertex(0, 0);
  CHECK(first_homology(pencil) == HomologyData{4, {}});

  for (int k = 1; k <= 9; ++k) {
    PlumbingGraph lens;
    lens.add_vertex(k, 0);
    const auto h = first_homology(lens);
    CHECK(h.betti == 0);
    if (k == 1) CHECK(h.torsion.empty());
    else CHECK(h.torsion == std::vector<BigInt>{k});
  }

  PlumbingGraph z2z2;
  z2z2.add_vertex(2, 0);
  z2z2.add_vertex(2, 0);
  CHECK(first_homology(z2z2) == HomologyData{0, {2, 2}});
}

TEST_CASE("homology of chains is the lens space order") {
  for (std::int64_t p = 2; p <= 40; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto ks = expand_ncf(p, q).entries;
      std::vector<std::int64_t> es;
      for (auto k : ks) es.push_back(-k);
      const auto h = first_homology(chain(es));
      CHECK(h.betti == 0);
      CHECK(h.torsion == std::vector<BigInt>{p});
    }
}

TEST_CASE("homology agrees with a determinant oracle on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    PlumbingGraph g;
    const int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) g.add_vertex(static_cast<int>(rng() % 9) - 6, 0);
    for (int i = 2; i <= n; ++i) g.add_edge(1 + static_cast<int>(rng() % (i - 1)), i, rng() % 2 ? 1 : -1);
    const auto h = first_homology(g);
    const BigInt det = abs(bareiss_det(matrix_of(g)));
    if (det == 0) {
      CHECK(h.betti > 0);
    } else {
      CHECK(h.betti == 0);
      BigInt prod = 1;
      for (const auto& t : h.torsion) prod *= t;
      CHECK(prod == det);
      for (std::size_t i = 1; i < h.torsion.size(); ++i) CHECK(h.torsion[i] % h.torsion[i - 1] == 0);
    }
  }
}

TEST_CASE("node graphs") {
  auto g4 = build_g(make_family(Family::Generic, 4));
  CHECK(special_node_graph(g4).nodes.size() == 10);
  CHECK(regular_node_graph(g4).nodes.size() == 4);
  CHECK_FALSE(is_complete_bipartite(regular_node_graph(g4)).has_value());

  PlumbingGraph star;
  const int c = star.add_vertex(-1, 0);
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_vertex(-2, 0), 1);
  const auto ns = regular_node_graph(star);
  CHECK(ns.nodes == std::vector<int>{c});
  CHECK(ns.links.empty());
  CHECK_FALSE(is_complete_bipartite(ns).has_value());

  CHECK(regular_node_graph(chain({-2, -3, -2})).nodes.empty());

  const auto d33 = normalize(build_gnsz(make_family(Family::DoublePencil, 3, 3))).graph;
  CHECK(is_complete_bipartite(regular_node_graph(d33)) == std::pair{3, 3});
  for (const auto& [id, v] : d33.vertices()) {
    if (!is_special_node(d33, id)) continue;
    for (auto e : d33.incident(id)) CHECK(d33.degree(d33.edges()[e].other(id)) >= 3);
  }

  // Links carry the Euler numbers of the string between the nodes.
  const auto nreg = regular_node_graph(build_g(make_family(Family::DoublePencil, 3, 3)));
  int strings23 = 0;
  for (const auto& l : nreg.links) {
    auto e = l.eulers;
    if (e == std::vector<std::int64_t>{-2, -3} || e == std::vector<std::int64_t>{-3, -2}) ++strings23;
  }
  CHECK(strings23 == 4);
}

TEST_CASE("isomorphism up to resigning") {
  auto g = chain({-2, -3, -4});
  PlumbingGraph h;
  h.add_vertex_with_id(10, -4, 0);
  h.add_vertex_with_id(20, -3, 0);
  h.add_vertex_with_id(30, -2, 0);
  h.add_edge(10, 20, 1);
  h.add_edge(20, 30, 1);
  auto w = is_isomorphic(g, h);
  REQUIRE(w.has_value());
  CHECK(w->at(1) == 30);

  PlumbingGraph p1 = chain({-2, -2, -2});
  p1.edge(0).sign = 1;
  p1.edge(1).sign = -1;
  PlumbingGraph p2 = chain({-2, -2, -2});
  p2.edge(0).sign = -1;
  p2.edge(1).sign = 1;
  CHECK(is_isomorphic(p1, p2).has_value());

  auto triangle = [](int s) {
    PlumbingGraph t;
    for (int i = 0; i < 3; ++i) t.add_vertex(-3, 0);
    t.add_edge(1, 2, 1);
    t.add_edge(2, 3, 1);
    t.add_edge(1, 3, s);
    return t;
  };
  CHECK_FALSE(is_isomorphic(triangle(1), triangle(-1)).has_value());
  CHECK(is_isomorphic(triangle(-1), apply(triangle(-1), move::Resign{2})).has_value());

  // Brute force over all R0 sequences on the triangle: the cycle sign product never changes.
  for (int mask = 0; mask < 8; ++mask) {
    auto t = triangle(1);
    for (int v = 1; v <= 3; ++v)
      if (mask >> (v - 1) & 1) t = apply(t, move::Resign{v});
    int prod = 1;
    for (const auto& e : t.edges()) prod *= e.sign;
    CHECK(prod == 1);
  }

  auto d = build_g(make_family(Family::Generic, 5));
  CHECK(canonical_signs(canonical_signs(d)) == canonical_signs(d));
  CHECK(is_isomorphic(d, canonical_signs(d)).has_value());
}

TEST_CASE("dot output") {
  CHECK(to_dot(PlumbingGraph{}) == "graph G {}");
  PlumbingGraph one;
  one.add_vertex(-1, 0);
  CHECK(to_dot(one) == "graph G {\n  n1 [label=\"e=-1,g=0\"];\n}\n");
  auto c = chain({-2, -3}, -1);
  CHECK(to_dot(c).find("n1 -- n2 [style=dashed];") != std::string::npos);
}
