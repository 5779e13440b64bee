#include "milnor/reconstruct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "milnor/boundary.hpp"
#include "milnor/calculus.hpp"
#include "milnor/error.hpp"

namespace milnor {

std::string to_string(BoundaryClass::Kind kind) {
  switch (kind) {
    case BoundaryClass::Kind::SingleLine: return "SingleLine";
    case BoundaryClass::Kind::Pencil: return "Pencil";
    case BoundaryClass::Kind::NearPencil: return "NearPencil";
    case BoundaryClass::Kind::DoublePencil: return "DoublePencil";
    case BoundaryClass::Kind::Poset: return "NonExceptional";
  }
  return "?";
}

namespace {

bool isolated_vertex(const PlumbingGraph& g, int v) { return g.degree(v) == 0; }

struct Candidate {
  PosetResult result;
  bool passes_123 = false;
};

Candidate try_bipartition(const PlumbingGraph& g, const NodeGraph& nsp, const std::set<int>& lines,
                          const std::set<int>& points) {
  Candidate out;
  // (1) line candidates are genus-0 vertices of Euler number -1.
  for (int v : lines) {
    if (g.vertex(v).euler != -1 || g.vertex(v).genus != 0) return out;
    // (2) and none of them is a special node.
    if (is_special_node(g, v)) return out;
  }
  const auto d = static_cast<std::int64_t>(lines.size());

  int next_line = 1;
  for (int v : lines) out.result.line_of[v] = next_line++;

  std::map<int, std::vector<int>> incident_lines;
  for (const auto& link : nsp.links) {
    const bool a_line = lines.count(link.a) != 0;
    const int v = a_line ? link.a : link.b;
    const int w = a_line ? link.b : link.a;
    incident_lines[w].push_back(out.result.line_of.at(v));
    if (is_special_node(g, w)) continue;
    // (3) chains into regular point nodes encode d / delta_w.
    std::vector<std::int64_t> ks;
    for (auto e : link.eulers) ks.push_back(-e);
    if (!a_line) std::reverse(ks.begin(), ks.end());
    if (ks.empty()) return out;
    const std::int64_t delta = g.degree(w);
    if (delta <= 0 || delta >= d) return out;
    try {
      if (eval_ncf(ks) != Rational(d, delta)) return out;
    } catch (const Error&) {
      return out;
    }
    if (expand_ncf(d, delta).entries != ks) return out;
  }
  out.passes_123 = true;

  // (4) pair axiom on the incidence.
  out.result.incidence.lines = static_cast<int>(d);
  for (int w : points) {
    auto ls = incident_lines[w];
    std::sort(ls.begin(), ls.end());
    out.result.incidence.points.push_back(ls);
    out.result.point_vertex.push_back(w);
  }
  try {
    Arrangement::validate(out.result.incidence);
    out.result.pair_axiom_ok = true;
  } catch (const Error&) {
    out.result.pair_axiom_ok = false;
  }
  return out;
}

}  // namespace

PosetResult determine_poset(const PlumbingGraph& g) {
  if (g.empty() || g.components().size() != 1)
    throw Error(ErrorCode::Unrecognized, "determine_poset needs a connected non-empty graph");
  const NodeGraph nsp = special_node_graph(g);
  if (nsp.nodes.size() < 2) throw Error(ErrorCode::Unrecognized, "fewer than two nodes");

  std::map<int, std::vector<int>> adj;
  for (const auto& l : nsp.links) {
    if (l.a == l.b) throw Error(ErrorCode::NotBipartite, "loop at node " + std::to_string(l.a));
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::map<int, int> side{{nsp.nodes.front(), 0}};
  std::vector<int> stack{nsp.nodes.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      auto [it, fresh] = side.emplace(w, 1 - side[v]);
      if (fresh) stack.push_back(w);
      else if (it->second == side[v])
        throw Error(ErrorCode::NotBipartite, "odd cycle through node " + std::to_string(w));
    }
  }
  if (side.size() != nsp.nodes.size())
    throw Error(ErrorCode::Unrecognized, "node graph is disconnected");

  std::array<std::set<int>, 2> parts;
  for (const auto& [v, s] : side) parts[s].insert(v);

  std::vector<Candidate> valid;
  for (int s : {0, 1}) {
    auto c = try_bipartition(g, nsp, parts[s], parts[1 - s]);
    if (c.passes_123) valid.push_back(std::move(c));
  }
  if (valid.empty()) throw Error(ErrorCode::NoValidBipartition, "no bipartition passes the chain tests");
  const auto full = std::count_if(valid.begin(), valid.end(),
                                  [](const Candidate& c) { return c.result.pair_axiom_ok; });
  if (full == 2 || (full == 0 && valid.size() == 2))
    throw Error(ErrorCode::AmbiguousBipartition, "both bipartitions are valid");
  for (auto& c : valid)
    if (c.result.pair_axiom_ok || valid.size() == 1) return std::move(c.result);
  throw Error(ErrorCode::NoValidBipartition, "no bipartition passes the chain tests");
}

BoundaryClass classify_boundary(const PlumbingGraph& g) {
  if (auto rep = is_normal_form(g); !rep.ok) throw Error(ErrorCode::NotNormalForm, rep.violation);
  BoundaryClass out;
  if (g.empty()) {
    out.kind = BoundaryClass::Kind::SingleLine;
    out.d = 1;
    return out;
  }

  const bool all_isolated_zero = std::all_of(g.vertices().begin(), g.vertices().end(), [&](const auto& kv) {
    return isolated_vertex(g, kv.first) && kv.second.euler == 0 && kv.second.genus == 0;
  });
  if (all_isolated_zero) {
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    auto k = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (k * k > n) --k;
    while ((k + 1) * (k + 1) <= n) ++k;
    if (k * k != n)
      throw Error(ErrorCode::Unrecognized, std::to_string(n) + " isolated vertices is not a square");
    out.kind = BoundaryClass::Kind::Pencil;
    out.d = static_cast<int>(k + 1);
    return out;
  }

  if (g.vertex_count() == 1) {
    const auto& [id, v] = *g.vertices().begin();
    if (isolated_vertex(g, id) && v.euler == 0 && v.genus >= 1) {
      out.kind = BoundaryClass::Kind::NearPencil;
      out.d = static_cast<int>(v.genus + 2);
      return out;
    }
  }

  if (g.components().size() != 1)
    throw Error(ErrorCode::Unrecognized, "disconnected graph that is not a pencil boundary");

  // The shape alone is not enough: a K_{a,b} with the wrong strings falls
  // through to determine_poset.
  if (auto ab = is_complete_bipartite(regular_node_graph(g));
      ab && ab->second >= 3 &&
      is_isomorphic(g, normalize(build_gnsz(make_family(Family::DoublePencil, ab->first, ab->second))).graph)) {
    out.kind = BoundaryClass::Kind::DoublePencil;
    out.a = ab->first;
    out.b = ab->second;
    out.d = out.a + out.b - 1;
    return out;
  }

  out.poset = determine_poset(g);
  out.kind = BoundaryClass::Kind::Poset;
  out.d = out.poset->incidence.lines;
  return out;
}

std::string RoundtripReport::summary() const {
  std::ostringstream os;
  os << "class=" << to_string(got.kind) << " d=" << got.d;
  if (got.kind == BoundaryClass::Kind::DoublePencil) os << " a=" << got.a << " b=" << got.b;
  os << " components=" << components << " iso=" << (iso ? "yes" : "no");
  return os.str();
}

std::string RoundtripReport::key_values() const {
  std::ostringstream os;
  os << "class=" << to_string(got.kind) << '\n'
     << "d=" << got.d << '\n'
     << "a=" << got.a << '\n'
     << "b=" << got.b << '\n'
     << "components=" << components << '\n'
     << "moves=" << moves << '\n'
     << "iso=" << (iso ? "yes" : "no") << '\n';
  return os.str();
}

RoundtripReport roundtrip(const Arrangement& arr) {
  const auto start = std::chrono::steady_clock::now();
  RoundtripReport rep;
  rep.expected = classify(arr);
  const auto norm = arr.d() == 1 ? NormalizeResult{} : normalize(build_gnsz(arr));
  rep.moves = norm.moves;
  rep.components = norm.graph.components().size();
  rep.got = classify_boundary(norm.graph);

  using K = ExceptionalClass::Kind;
  using B = BoundaryClass::Kind;
  const auto& e = rep.expected;
  const auto& g = rep.got;
  switch (e.kind) {
    case K::SingleLine: rep.iso = g.kind == B::SingleLine; break;
    case K::Pencil: rep.iso = g.kind == B::Pencil && g.d == e.d; break;
    case K::NearPencil: rep.iso = g.kind == B::NearPencil && g.d == e.d; break;
    case K::DoublePencil:
      rep.iso = g.kind == B::DoublePencil && g.a == e.a && g.b == e.b && g.d == e.d;
      break;
    case K::NonExceptional:
      rep.iso = g.kind == B::Poset && g.poset->pair_axiom_ok &&
                isomorphic(g.poset->incidence, arr.incidence()).has_value();
      break;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace milnor
