#include "milnor/calculus.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::size_t> non_loop_edges(const PlumbingGraph& g, int v) {
  std::vector<std::size_t> out;
  for (std::size_t e : g.incident(v))
    if (!g.edges()[e].is_loop()) out.push_back(e);
  return out;
}

std::optional<std::string> check_blow_down(const PlumbingGraph& g, int v) {
  if (!g.has_vertex(v)) return "no such vertex";
  const auto& x = g.vertex(v);
  if (x.euler != 1 && x.euler != -1) return "Euler number is not +-1";
  if (x.genus != 0) return "genus is not 0";
  if (g.loop_count(v) != 0) return "vertex carries a loop";
  if (g.degree(v) > 2) return "valency exceeds 2";
  return std::nullopt;
}

std::optional<std::string> check_zero_string(const PlumbingGraph& g, int v) {
  if (!g.has_vertex(v)) return "no such vertex";
  const auto& x = g.vertex(v);
  if (x.euler != 0) return "Euler number is not 0";
  if (x.genus != 0) return "genus is not 0";
  if (g.loop_count(v) != 0) return "vertex carries a loop";
  return std::nullopt;
}

std::optional<std::string> check_absorb(const PlumbingGraph& g, int v) {
  if (auto why = check_zero_string(g, v)) return why;
  if (g.degree(v) != 2) return "valency is not 2";
  const auto inc = g.incident(v);
  if (g.edges()[inc[0]].other(v) == g.edges()[inc[1]].other(v)) return "both edges reach the same vertex";
  return std::nullopt;
}

std::optional<std::string> check_handle(const PlumbingGraph& g, int v) {
  if (auto why = check_zero_string(g, v)) return why;
  if (g.degree(v) != 2) return "valency is not 2";
  const auto inc = g.incident(v);
  const auto& e1 = g.edges()[inc[0]];
  const auto& e2 = g.edges()[inc[1]];
  if (e1.other(v) != e2.other(v)) return "edges reach different vertices";
  if (e1.sign == e2.sign) return "edge signs agree (non-orientable handle)";
  return std::nullopt;
}

std::optional<std::string> check_split(const PlumbingGraph& g, int v) {
  if (auto why = check_zero_string(g, v)) return why;
  if (g.degree(v) != 1) return "not a leaf";
  const int w = g.edges()[g.incident(v)[0]].other(v);
  if (g.loop_count(w) != 0) return "neighbour carries a loop";
  // Every other edge of w must reach its own component of G - {v, w}.
  std::vector<int> rest;
  for (const auto& [id, x] : g.vertices())
    if (id != v && id != w) rest.push_back(id);
  const auto comps = g.induced(rest).components();
  std::set<std::size_t> hit;
  for (std::size_t e : g.incident(w)) {
    const int x = g.edges()[e].other(w);
    if (x == v) continue;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (std::binary_search(comps[c].begin(), comps[c].end(), x)) {
        if (!hit.insert(c).second) return "neighbour meets one component twice";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string describe(const Move& mv) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const move::Resign& m) { os << "R0 " << m.v; },
                 [&](const move::BlowDown& m) { os << "BlowDown " << m.v; },
                 [&](const move::BlowUpEdge& m) {
                   os << "BlowUpEdge " << m.edge << ' ' << (m.sign > 0 ? '+' : '-');
                 },
                 [&](const move::BlowUpVertex& m) {
                   os << "BlowUpVertex " << m.v << ' ' << (m.sign > 0 ? '+' : '-');
                 },
                 [&](const move::Absorb0& m) { os << "Absorb0 " << m.v; },
                 [&](const move::Extrude0& m) {
                   os << "Extrude0 " << m.v << " e=" << m.euler << " g=" << m.genus;
                   for (auto e : m.edges) os << ' ' << e;
                 },
                 [&](const move::Handle5& m) { os << "Handle5 " << m.v; },
                 [&](const move::Split6& m) { os << "Split6 " << m.v; },
             },
             mv);
  return os.str();
}

std::optional<std::string> why_not_applicable(const PlumbingGraph& g, const Move& mv) {
  return std::visit(
      overloaded{
          [&](const move::Resign& m) -> std::optional<std::string> {
            if (!g.has_vertex(m.v)) return "no such vertex";
            return std::nullopt;
          },
          [&](const move::BlowDown& m) { return check_blow_down(g, m.v); },
          [&](const move::BlowUpEdge& m) -> std::optional<std::string> {
            if (m.edge >= g.edges().size()) return "no such edge";
            if (m.sign != 1 && m.sign != -1) return "sign must be +-1";
            return std::nullopt;
          },
          [&](const move::BlowUpVertex& m) -> std::optional<std::string> {
            if (m.v != 0 && !g.has_vertex(m.v)) return "no such vertex";
            if (m.sign != 1 && m.sign != -1) return "sign must be +-1";
            return std::nullopt;
          },
          [&](const move::Absorb0& m) { return check_absorb(g, m.v); },
          [&](const move::Extrude0& m) -> std::optional<std::string> {
            if (!g.has_vertex(m.v)) return "no such vertex";
            if (m.genus < 0 || m.genus > g.vertex(m.v).genus) return "genus split out of range";
            std::set<std::size_t> seen;
            for (auto e : m.edges) {
              if (e >= g.edges().size()) return "no such edge";
              const auto& ed = g.edges()[e];
              if (ed.is_loop() || (ed.u != m.v && ed.v != m.v)) return "edge is not a plain edge at v";
              if (!seen.insert(e).second) return "edge listed twice";
            }
            return std::nullopt;
          },
          [&](const move::Handle5& m) { return check_handle(g, m.v); },
          [&](const move::Split6& m) { return check_split(g, m.v); },
      },
      mv);
}

PlumbingGraph apply(const PlumbingGraph& input, const Move& mv) {
  if (auto why = why_not_applicable(input, mv))
    throw Error(ErrorCode::MoveNotApplicable, describe(mv) + ": " + *why);
  PlumbingGraph g = without_arrowheads(input);

  std::visit(
      overloaded{
          [&](const move::Resign& m) {
            for (std::size_t e : non_loop_edges(g, m.v)) g.edge(e).sign *= -1;
          },
          [&](const move::BlowDown& m) {
            const std::int64_t s = g.vertex(m.v).euler;
            const auto inc = g.incident(m.v);
            if (inc.size() == 1) {
              g.vertex(g.edges()[inc[0]].other(m.v)).euler -= s;
            } else if (inc.size() == 2) {
              const Edge e1 = g.edges()[inc[0]];
              const Edge e2 = g.edges()[inc[1]];
              const int u = e1.other(m.v);
              const int w = e2.other(m.v);
              g.vertex(u).euler -= s;
              g.vertex(w).euler -= s;
              g.remove_vertex(m.v);
              g.add_edge(u, w, static_cast<int>(-s * e1.sign * e2.sign));
              return;
            }
            g.remove_vertex(m.v);
          },
          [&](const move::BlowUpEdge& m) {
            const Edge e = g.edges()[m.edge];
            g.remove_edge(m.edge);
            const int y = g.add_vertex(m.sign, 0);
            g.vertex(e.u).euler += m.sign;
            g.vertex(e.v).euler += m.sign;
            g.add_edge(e.u, y, 1);
            g.add_edge(y, e.v, -m.sign * e.sign);
          },
          [&](const move::BlowUpVertex& m) {
            const int y = g.add_vertex(m.sign, 0);
            if (m.v != 0) {
              g.vertex(m.v).euler += m.sign;
              g.add_edge(m.v, y, 1);
            }
          },
          [&](const move::Absorb0& m) {
            const auto inc = g.incident(m.v);
            const Edge e1 = g.edges()[inc[0]];
            const Edge e2 = g.edges()[inc[1]];
            int u = e1.other(m.v);
            int w = e2.other(m.v);
            if (w < u) std::swap(u, w);
            const int s = -e1.sign * e2.sign;
            g.remove_vertex(m.v);
            g.vertex(u).euler += g.vertex(w).euler;
            g.vertex(u).genus += g.vertex(w).genus;
            std::vector<Edge> moved;
            for (std::size_t e : g.incident(w)) moved.push_back(g.edges()[e]);
            g.remove_vertex(w);
            for (const Edge& e : moved) {
              if (e.is_loop()) {
                g.add_edge(u, u, e.sign);
              } else {
                g.add_edge(u, e.other(w) == w ? u : e.other(w), e.sign * s);
              }
            }
          },
          [&](const move::Extrude0& m) {
            auto& v = g.vertex(m.v);
            v.euler -= m.euler;
            v.genus -= m.genus;
            const int x = g.add_vertex(m.euler, m.genus);
            const int z = g.add_vertex(0, 0);
            std::vector<Edge> moved;
            for (auto e : m.edges) moved.push_back(g.edges()[e]);
            auto idx = m.edges;
            std::sort(idx.rbegin(), idx.rend());
            for (auto e : idx) g.remove_edge(e);
            g.add_edge(m.v, z, 1);
            g.add_edge(z, x, 1);
            for (const Edge& e : moved) g.add_edge(x, e.other(m.v), -e.sign);
          },
          [&](const move::Handle5& m) {
            const int u = g.edges()[g.incident(m.v)[0]].other(m.v);
            g.remove_vertex(m.v);
            g.vertex(u).genus += 1;
          },
          [&](const move::Split6& m) {
            const int w = g.edges()[g.incident(m.v)[0]].other(m.v);
            const std::int64_t genus = g.vertex(w).genus;
            g.remove_vertex(m.v);
            g.remove_vertex(w);
            for (std::int64_t i = 0; i < 2 * genus; ++i) g.add_vertex(0, 0);
          },
      },
      mv);
  return g;
}

namespace {

enum class ActionKind { BlowDown, Absorb, Handle, Split, Positive };

struct Action {
  ActionKind kind;
  int v;
};

bool is_positive_string_vertex(const PlumbingGraph& g, int v) {
  const auto& x = g.vertex(v);
  return x.euler >= 2 && x.genus == 0 && g.degree(v) <= 2 && g.loop_count(v) == 0;
}

std::vector<Action> candidates(const PlumbingGraph& g) {
  std::vector<Action> out;
  for (const auto& [id, x] : g.vertices())
    if (!check_blow_down(g, id)) out.push_back({ActionKind::BlowDown, id});
  for (const auto& [id, x] : g.vertices())
    if (!check_absorb(g, id)) out.push_back({ActionKind::Absorb, id});
  for (const auto& [id, x] : g.vertices())
    if (!check_handle(g, id)) out.push_back({ActionKind::Handle, id});
  for (const auto& [id, x] : g.vertices())
    if (!check_split(g, id)) out.push_back({ActionKind::Split, id});
  for (const auto& [id, x] : g.vertices())
    if (is_positive_string_vertex(g, id)) out.push_back({ActionKind::Positive, id});
  return out;
}

std::size_t edge_between(const PlumbingGraph& g, int x, int y) {
  for (std::size_t e : g.incident(x))
    if (g.edges()[e].other(x) == y) return e;
  throw Error(ErrorCode::MoveNotApplicable, "internal: missing edge");
}

struct Driver {
  PlumbingGraph g;
  std::size_t budget;
  bool tracing;
  std::size_t moves = 0;
  std::vector<std::string> trace;

  void step(const Move& mv) {
    if (moves >= budget)
      throw Error(ErrorCode::NonTerminating,
                  "move budget of " + std::to_string(budget) + " exhausted");
    g = milnor::apply(g, mv);
    ++moves;
    if (tracing) trace.push_back(std::to_string(moves) + " " + describe(mv));
  }

  // A string vertex x of Euler number k >= 2 becomes k - 1 vertices of
  // Euler number -2; its neighbours drop by one.
  void replace_positive(int x) {
    if (g.degree(x) == 0) step(move::BlowUpVertex{x, -1});
    if (g.degree(x) == 1) {
      while (g.vertex(x).euler > 0) step(move::BlowUpEdge{g.incident(x)[0], -1});
      step(move::Split6{x});
      return;
    }
    std::size_t e = g.incident(x)[0];
    while (g.vertex(x).euler > 0) {
      step(move::BlowUpEdge{e, -1});
      const int y = g.next_id() - 1;
      e = edge_between(g, x, y);
    }
    step(move::Absorb0{x});
  }

  void act(const Action& a) {
    switch (a.kind) {
      case ActionKind::BlowDown: step(move::BlowDown{a.v}); break;
      case ActionKind::Absorb: step(move::Absorb0{a.v}); break;
      case ActionKind::Handle: step(move::Handle5{a.v}); break;
      case ActionKind::Split: step(move::Split6{a.v}); break;
      case ActionKind::Positive: replace_positive(a.v); break;
    }
  }
};

}  // namespace

NormalizeResult normalize(const PlumbingGraph& input, const NormalizeOptions& opts) {
  Driver drv{without_arrowheads(input), opts.budget, opts.trace, 0, {}};
  if (drv.budget == 0) drv.budget = 10 * (input.vertex_count() + input.edges().size());
  std::optional<std::mt19937_64> rng;
  if (opts.seed) rng.emplace(*opts.seed);

  while (true) {
    const auto cand = candidates(drv.g);
    if (cand.empty()) break;
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      drv.act(cand[pick(*rng)]);
    } else {
      drv.act(cand.front());
    }
  }
  const auto report = is_normal_form(drv.g);
  if (!report.ok)
    throw Error(ErrorCode::NonTerminating, "reduction stopped outside normal form: " + report.violation);
  return {std::move(drv.g), drv.moves, std::move(drv.trace)};
}

NormalFormReport is_normal_form(const PlumbingGraph& g) {
  for (const auto& [id, x] : g.vertices()) {
    const int deg = g.degree(id);
    if (x.genus != 0 || deg > 2) continue;
    if (deg == 0 && x.euler == 0) continue;
    if (deg == 0)
      return {false, "isolated vertex " + std::to_string(id) + " has Euler number " +
                         std::to_string(x.euler) + " and genus 0"};
    if (x.euler > -2)
      return {false, "string vertex " + std::to_string(id) + " has Euler number " +
                         std::to_string(x.euler) + " > -2"};
  }
  const auto cand = candidates(g);
  if (!cand.empty()) return {false, "a reducing move applies at vertex " + std::to_string(cand.front().v)};
  return {};
}

}  // namespace milnor
