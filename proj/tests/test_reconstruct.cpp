#include "doctest.h"
#include "milnor/boundary.hpp"
#include "milnor/calculus.hpp"
#include "milnor/corpus.hpp"
#include "milnor/error.hpp"
#include "milnor/reconstruct.hpp"

using namespace milnor;

namespace {

ErrorCode code_of(const PlumbingGraph& g) {
  try {
    classify_boundary(g);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::ParseError;
}

PlumbingGraph normal_of(const Arrangement& arr) { return normalize(build_gnsz(arr)).graph; }

}  // namespace

TEST_CASE("exceptional shapes") {
  PlumbingGraph empty;
  CHECK(classify_boundary(empty).kind == BoundaryClass::Kind::SingleLine);
  CHECK(classify_boundary(empty).d == 1);

  PlumbingGraph four;
  for (int i = 0; i < 4; ++i) four.add_vertex(0);
  auto p = classify_boundary(four);
  CHECK(p.kind == BoundaryClass::Kind::Pencil);
  CHECK(p.d == 3);

  PlumbingGraph three;
  for (int i = 0; i < 3; ++i) three.add_vertex(0);
  CHECK(code_of(three) == ErrorCode::Unrecognized);

  PlumbingGraph one;
  one.add_vertex(0, 3);
  auto np = classify_boundary(one);
  CHECK(np.kind == BoundaryClass::Kind::NearPencil);
  CHECK(np.d == 5);

  auto dp = classify_boundary(normal_of(make_family(Family::DoublePencil, 4, 3)));
  CHECK(dp.kind == BoundaryClass::Kind::DoublePencil);
  CHECK(dp.a == 4);
  CHECK(dp.b == 3);
  CHECK(dp.d == 6);
}

TEST_CASE("generic(4) poset") {
  auto arr = make_family(Family::Generic, 4);
  auto bc = classify_boundary(build_g(arr));
  REQUIRE(bc.kind == BoundaryClass::Kind::Poset);
  REQUIRE(bc.poset.has_value());
  CHECK(bc.d == 4);
  CHECK(bc.poset->pair_axiom_ok);
  CHECK(bc.poset->incidence.lines == 4);
  CHECK(bc.poset->incidence.points.size() == 6);
  CHECK(isomorphic(bc.poset->incidence, arr.incidence()).has_value());
}

TEST_CASE("errors") {
  // Not normal: a -1 vertex of degree 1.
  PlumbingGraph g;
  int a = g.add_vertex(-1), b = g.add_vertex(-3);
  g.add_edge(a, b);
  CHECK(code_of(g) == ErrorCode::NotNormalForm);

  // Disconnected and not a bunch of isolated zeros.
  PlumbingGraph two;
  two.add_vertex(0, 1);
  two.add_vertex(0, 1);
  CHECK(code_of(two) == ErrorCode::Unrecognized);

  // A lone -2 chain: normal, no nodes at all.
  PlumbingGraph chain;
  int x = chain.add_vertex(-2), y = chain.add_vertex(-2), z = chain.add_vertex(-2);
  chain.add_edge(x, y);
  chain.add_edge(y, z);
  CHECK(code_of(chain) == ErrorCode::Unrecognized);

  // Ceva with one string Euler number bumped: the bipartition survives but
  // condition (3) fails on both sides.
  auto ceva_g = build_g(ceva());
  const int first_string = ceva().d() + ceva().point_count() + 1;
  bool bumped = false;
  for (auto& [id, v] : ceva_g.vertices())
    if (!bumped && id >= first_string) {
      ceva_g.vertex(id).euler -= 1;
      bumped = true;
    }
  REQUIRE(bumped);
  CHECK(code_of(ceva_g) == ErrorCode::NoValidBipartition);

  // K_{3,3} shape with the wrong strings is not a double pencil.
  auto k33 = normal_of(make_family(Family::DoublePencil, 3, 3));
  REQUIRE(is_complete_bipartite(regular_node_graph(k33)) == std::pair<int, int>{3, 3});
  for (auto& [id, v] : k33.vertices())
    if (v.euler == -3) k33.vertex(id).euler = -4;
  CHECK(code_of(k33) == ErrorCode::NoValidBipartition);
}

TEST_CASE("non-exceptional instances come back") {
  for (const auto& e : nonexceptional_corpus()) {
    auto bc = classify_boundary(normal_of(e.arr));
    REQUIRE_MESSAGE(bc.kind == BoundaryClass::Kind::Poset, e.key);
    CHECK(bc.poset->pair_axiom_ok);
    CHECK_MESSAGE(isomorphic(bc.poset->incidence, e.arr.incidence()).has_value(), e.key);
  }
}

TEST_CASE("broken Pappus reads back as itself") {
  auto arr = broken_pappus();
  CHECK(arr.point_count() == 20);
  auto bc = classify_boundary(build_g(arr));
  REQUIRE(bc.kind == BoundaryClass::Kind::Poset);
  CHECK(bc.poset->pair_axiom_ok);
  CHECK(isomorphic(bc.poset->incidence, arr.incidence()).has_value());
  CHECK_FALSE(isomorphic(bc.poset->incidence, pappus().incidence()).has_value());
}

TEST_CASE("roundtrip summaries") {
  auto r = roundtrip(make_family(Family::Pencil, 5));
  CHECK(r.summary() == "class=Pencil d=5 components=16 iso=yes");
  auto s = roundtrip(make_family(Family::Generic, 1));
  CHECK(s.iso);
  CHECK(s.summary() == "class=SingleLine d=1 components=0 iso=yes");
  auto dp = roundtrip(make_family(Family::DoublePencil, 4, 3));
  CHECK(dp.iso);
  CHECK(dp.summary().find("class=DoublePencil d=6 a=4 b=3") == 0);
  CHECK(dp.key_values().find("iso=yes") != std::string::npos);
  for (const auto& e : corpus(8)) CHECK_MESSAGE(roundtrip(e.arr).iso, e.key);
}
