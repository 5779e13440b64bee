#pragma once

// Plumbing graphs for the boundary of the Milnor fiber of a line arrangement:
// the configuration graph, the graph G_NSz coming out of the Nemethi-Szilard
// construction, and the almost minimal graph G with every line vertex at -1.
//
// Vertex ids: lines 1..d, points d+1..d+c in the arrangement's point order,
// string vertices after that, arrowheads last.

#include <array>
#include <optional>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/plumbing.hpp"

namespace milnor {

struct ConfigGraph {
  enum class Kind { Line, Point, Arrow };
  struct Node {
    Kind kind = Kind::Line;
    int index = 0;                    // line number, point index, or line of the arrowhead
    std::array<int, 3> decoration{};  // (n, d, 1) style triple
    int genus = 0;
  };
  struct Link {
    int a = 0;  // node indices
    int b = 0;
    int weight = 0;
  };
  std::vector<Node> nodes;
  std::vector<Link> links;
};

/// Throws DomainError for d < 2.
ConfigGraph build_config_graph(const Arrangement& arr);

/// G_NSz with arrowheads and a full multiplicity system. Throws DomainError for d < 2.
PlumbingGraph build_gnsz(const Arrangement& arr);

/// G. Throws DomainError for a pencil or d < 2.
PlumbingGraph build_g(const Arrangement& arr);

/// Rewrites G_NSz into G with blow-ups, 0-absorptions, 0-extrusions,
/// blow-downs and resigning. `gnsz` must come from build_gnsz(arr).
PlumbingGraph nsz_to_g(const PlumbingGraph& gnsz, const Arrangement& arr);

struct FiberClasses {
  std::array<BigInt, 2> left;
  std::array<BigInt, 2> right;
  BigInt det;  // det(right, left) of the vectors above
  /// Same determinant after scaling each side by d / p, p the numerator of
  /// the side's continued fraction. Only set when d is given.
  std::optional<BigInt> scaled_det;
};

/// Classes of the fibers at the two ends of a string -1 vertex with chains of
/// Euler magnitudes `left` and `right`, seeded by (0,1), (1,1), (1,0).
/// Throws DomainError on an empty side.
FiberClasses fiber_classes(const std::vector<std::int64_t>& left,
                           const std::vector<std::int64_t>& right,
                           std::optional<std::int64_t> d = std::nullopt);

/// The two chains (Euler magnitudes read outwards) at the unique genus-0
/// vertex of Euler number -1 and valency 2 whose both sides end in nodes.
std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> central_string(
    const PlumbingGraph& g);

}  // namespace milnor
