#pragma once

// Test and batch inputs: exhaustive combinatorial arrangements for small d,
// the exceptional families, and a few fixed configurations.

#include <string>
#include <vector>

#include "milnor/arrangement.hpp"

namespace milnor {

/// Every linear space on d lines (each pair of lines in exactly one point),
/// one per isomorphism class, in a fixed order. d >= 1.
std::vector<Arrangement> linear_spaces(int d);

/// The nine lines of a Pappus configuration: 9 triple and 9 double points.
Arrangement pappus();
/// x, y, z, x-y, x-z, y-z: 4 triple and 3 double points.
Arrangement ceva();
/// Pappus with one triple point replaced by three double points. Satisfies
/// the pair axiom; not realizable over C.
Arrangement broken_pappus();

/// The lines behind pappus() and ceva().
std::vector<RationalLine> pappus_lines();
std::vector<RationalLine> ceva_lines();

struct CorpusEntry {
  std::string key;
  Arrangement arr;
};

/// Family instances with d <= max_d, the linear spaces with d <= min(max_d, 7),
/// and the Pappus and Ceva fixtures, sorted by key.
std::vector<CorpusEntry> corpus(int max_d);

/// The non-exceptional part of the linear spaces with d <= 7 plus the fixtures.
std::vector<CorpusEntry> nonexceptional_corpus();

}  // namespace milnor
