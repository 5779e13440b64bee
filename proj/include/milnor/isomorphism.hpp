#pragma once

// Individualization-refinement search for isomorphisms of small vertex-colored
// graphs whose vertex pairs carry integer labels (0 = not adjacent).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace milnor {

struct LabeledGraph {
  std::vector<std::int64_t> color;
  // Symmetric; label[u][v] == 0 means no relation.
  std::vector<std::vector<std::int64_t>> label;

  explicit LabeledGraph(std::size_t n = 0)
      : color(n, 0), label(n, std::vector<std::int64_t>(n, 0)) {}
  std::size_t size() const { return color.size(); }
};

/// Mapping from vertices of `a` to vertices of `b`. `accept` may veto a
/// complete colour- and label-preserving bijection; the search then continues.
using MappingPredicate = std::function<bool(const std::vector<int>&)>;

std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                                                 const MappingPredicate& accept = {});

}  // namespace milnor
