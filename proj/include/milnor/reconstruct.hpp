#pragma once

// From a normal-form plumbing graph back to the combinatorics of the
// arrangement.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "milnor/arrangement.hpp"
#include "milnor/plumbing.hpp"

namespace milnor {

struct PosetResult {
  Incidence incidence;         // lines 1..|Nd1|, points as sorted line lists
  bool pair_axiom_ok = true;   // false: returned anyway as a raw poset
  std::map<int, int> line_of;  // vertex id -> line number
  std::vector<int> point_vertex;
};

struct BoundaryClass {
  enum class Kind { SingleLine, Pencil, NearPencil, DoublePencil, Poset };
  Kind kind = Kind::SingleLine;
  int d = 0;
  int a = 0;
  int b = 0;
  std::optional<PosetResult> poset;
};

std::string to_string(BoundaryClass::Kind kind);

/// Throws NotNormalForm, Unrecognized, and whatever determine_poset throws.
BoundaryClass classify_boundary(const PlumbingGraph& g);

/// Throws Unrecognized (disconnected or empty), NotBipartite,
/// NoValidBipartition, AmbiguousBipartition.
PosetResult determine_poset(const PlumbingGraph& g);

struct RoundtripReport {
  ExceptionalClass expected;
  BoundaryClass got;
  bool iso = false;  // tags, parameters and (if any) posets agree
  std::size_t moves = 0;
  std::size_t components = 0;
  double seconds = 0;

  /// "class=Pencil d=5 components=16 iso=yes"
  std::string summary() const;
  /// One key=value per line: class, d, a, b, components, moves, iso.
  std::string key_values() const;
};

/// classify(A) against classify_boundary(normalize(build_gnsz(A))).
RoundtripReport roundtrip(const Arrangement& arr);

}  // namespace milnor
