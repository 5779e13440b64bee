#pragma once

// Combinatorics of projective line arrangements: the rank-2 intersection
// poset stored as line/point incidence.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "milnor/cfrac.hpp"

namespace milnor {

/// Raw incidence data: lines are 1..lines, each point is a sorted set of line
/// indices. Nothing about it is checked; see Arrangement for the validated form.
struct Incidence {
  int lines = 0;
  std::vector<std::vector<int>> points;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// A validated arrangement: every pair of distinct lines meets in exactly one
/// point, every point carries at least two lines and no point repeats.
/// Points are kept sorted lexicographically.
class Arrangement {
 public:
  /// Throws PairAxiomViolation, DuplicatePoint, DegeneratePoint or
  /// ParamOutOfRange (d < 1, line index out of range).
  static Arrangement validate(std::vector<std::vector<int>> points, int d);
  static Arrangement validate(const Incidence& inc) { return validate(inc.points, inc.lines); }

  int d() const { return d_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  const std::vector<std::vector<int>>& points() const { return points_; }
  const std::vector<int>& point(int j) const { return points_.at(j); }

  /// n-bar_i: number of points on line i (1-based).
  int points_on_line(int line) const { return line_degree_.at(line - 1); }
  /// n_j: number of lines through point j (0-based).
  int lines_through(int j) const { return static_cast<int>(points_.at(j).size()); }
  /// c_j = gcd(d, n_j).
  int point_gcd(int j) const;
  /// Indices of the points on line i.
  std::vector<int> points_of_line(int line) const;

  Incidence incidence() const { return {d_, points_}; }

 private:
  int d_ = 0;
  std::vector<std::vector<int>> points_;
  std::vector<int> line_degree_;
};

/// alpha x + beta y + gamma z = 0, up to a nonzero scalar.
struct RationalLine {
  std::array<Rational, 3> coeffs;

  bool proportional_to(const RationalLine& other) const;
};

/// Exact pairwise intersection of the lines, with coincident points merged.
/// Throws DuplicateLine for proportional inputs, DomainError for an empty
/// list or an all-zero coefficient triple.
Arrangement from_lines(const std::vector<RationalLine>& lines);

struct ExceptionalClass {
  enum class Kind { SingleLine, Pencil, NearPencil, DoublePencil, NonExceptional };
  Kind kind = Kind::NonExceptional;
  int d = 0;
  int a = 0;  // DoublePencil only, a >= b
  int b = 0;

  friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
};

std::string to_string(ExceptionalClass::Kind kind);
std::string to_string(const ExceptionalClass& cls);

enum class Family { Pencil, NearPencil, DoublePencil, Generic };

std::optional<Family> family_from_string(const std::string& name);

/// pencil(d), d >= 2; near_pencil(d), d >= 3; double_pencil(a, b), a >= b >= 3;
/// generic(d), d >= 1. Throws ParamOutOfRange.
Arrangement make_family(Family kind, int p1, int p2 = 0);

ExceptionalClass classify(const Arrangement& arr);

/// Line permutation (0-based, lines of `a` to lines of `b`) carrying the
/// points of `a` onto the points of `b`, if one exists.
std::optional<std::vector<int>> isomorphic(const Incidence& a, const Incidence& b);

}  // namespace milnor
