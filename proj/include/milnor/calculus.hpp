#pragma once

// Plumbing calculus: the moves R0, R1 (and inverse), R3 (and inverse), R5 and
// R6 as graph rewrites, plus a normalisation driver built on them.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "milnor/plumbing.hpp"

namespace milnor {

namespace move {
/// R0: reverse the sign of every non-loop edge at v.
struct Resign { int v; };
/// R1: delete v (e = +-1, g = 0, valency <= 2, no loop at v).
struct BlowDown { int v; };
/// R1 inverse on an edge: insert a vertex of Euler number `sign`.
struct BlowUpEdge { std::size_t edge; int sign; };
/// R1 inverse at a vertex: attach a leaf of Euler number `sign` (v == 0: new component).
struct BlowUpVertex { int v; int sign; };
/// R3: delete a 0-vertex of genus 0 with two distinct neighbours and merge them.
struct Absorb0 { int v; };
/// R3 inverse: split v into v and a new vertex joined through a new 0-vertex.
/// The new vertex takes `euler`, `genus` and the listed edges.
struct Extrude0 {
  int v;
  std::int64_t euler;
  std::int64_t genus;
  std::vector<std::size_t> edges;
};
/// R5: a 0-vertex of genus 0 joined to one vertex u by two edges of opposite
/// sign is removed and the genus of u goes up by one.
struct Handle5 { int v; };
/// R6: a 0-leaf v of genus 0 and its neighbour w are removed; the components
/// hanging off w separate and 2 g_w isolated (0, [0]) vertices are added.
struct Split6 { int v; };
}  // namespace move

using Move = std::variant<move::Resign, move::BlowDown, move::BlowUpEdge, move::BlowUpVertex,
                          move::Absorb0, move::Extrude0, move::Handle5, move::Split6>;

std::string describe(const Move& mv);

/// Reason the move does not apply, or nullopt if it does.
std::optional<std::string> why_not_applicable(const PlumbingGraph& g, const Move& mv);

/// Throws MoveNotApplicable. Arrowheads and multiplicities are dropped.
PlumbingGraph apply(const PlumbingGraph& g, const Move& mv);

struct NormalizeOptions {
  /// Pick uniformly among the applicable moves instead of the fixed priority.
  std::optional<std::uint64_t> seed;
  /// Elementary move budget; 0 means 10 (V + E) of the input.
  std::size_t budget = 0;
  bool trace = false;
};

struct NormalizeResult {
  PlumbingGraph graph;
  std::size_t moves = 0;
  std::vector<std::string> trace;  // "<step> <tag> <args>"
};

/// Reduces to a fixpoint with blow-downs, 0-chain absorptions, handle
/// absorptions, splittings, and the replacement of string vertices of Euler
/// number >= 2 by strings of -2's (blow-ups followed by an absorption or a
/// splitting). Throws NonTerminating when the budget runs out or the fixpoint
/// is not in normal form.
NormalizeResult normalize(const PlumbingGraph& g, const NormalizeOptions& opts = {});

struct NormalFormReport {
  bool ok = true;
  std::string violation;
};

/// String vertices (genus 0, valency <= 2, other than an isolated 0-vertex)
/// have Euler number <= -2, and no reducing move of the driver applies.
NormalFormReport is_normal_form(const PlumbingGraph& g);

}  // namespace milnor
