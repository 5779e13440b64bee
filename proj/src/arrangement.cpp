#include "milnor/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "milnor/error.hpp"
#include "milnor/isomorphism.hpp"

namespace milnor {

Arrangement Arrangement::validate(std::vector<std::vector<int>> points, int d) {
  if (d < 1) throw Error(ErrorCode::ParamOutOfRange, "an arrangement needs d >= 1");
  for (auto& p : points) {
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end())
      throw Error(ErrorCode::DegeneratePoint, "point lists a line twice");
    if (p.size() < 2) throw Error(ErrorCode::DegeneratePoint, "point with fewer than two lines");
    if (p.front() < 1 || p.back() > d)
      throw Error(ErrorCode::ParamOutOfRange, "line index outside 1.." + std::to_string(d));
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw Error(ErrorCode::DuplicatePoint, "two points with the same line set");

  std::vector<int> seen(static_cast<std::size_t>(d) * d, 0);
  for (const auto& p : points)
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = x + 1; y < p.size(); ++y) ++seen[(p[x] - 1) * d + (p[y] - 1)];
  for (int i = 1; i <= d; ++i) {
    for (int k = i + 1; k <= d; ++k) {
      const int count = seen[(i - 1) * d + (k - 1)];
      if (count != 1) {
        throw Error(ErrorCode::PairAxiomViolation,
                    "lines " + std::to_string(i) + " and " + std::to_string(k) + " share " +
                        std::to_string(count) + " points");
      }
    }
  }

  Arrangement arr;
  arr.d_ = d;
  arr.points_ = std::move(points);
  arr.line_degree_.assign(d, 0);
  for (const auto& p : arr.points_)
    for (int line : p) ++arr.line_degree_[line - 1];
  return arr;
}

int Arrangement::point_gcd(int j) const { return std::gcd(d_, lines_through(j)); }

std::vector<int> Arrangement::points_of_line(int line) const {
  std::vector<int> out;
  for (int j = 0; j < point_count(); ++j)
    if (std::binary_search(points_[j].begin(), points_[j].end(), line)) out.push_back(j);
  return out;
}

bool RationalLine::proportional_to(const RationalLine& other) const {
  const auto& a = coeffs;
  const auto& b = other.coeffs;
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

Arrangement from_lines(const std::vector<RationalLine>& lines) {
  if (lines.empty()) throw Error(ErrorCode::DomainError, "from_lines needs at least one line");
  for (const auto& l : lines) {
    if (l.coeffs[0] == 0 && l.coeffs[1] == 0 && l.coeffs[2] == 0)
      throw Error(ErrorCode::DomainError, "line with all coefficients zero");
  }
  const int d = static_cast<int>(lines.size());
  for (int i = 0; i < d; ++i)
    for (int k = i + 1; k < d; ++k)
      if (lines[i].proportional_to(lines[k]))
        throw Error(ErrorCode::DuplicateLine,
                    "lines " + std::to_string(i + 1) + " and " + std::to_string(k + 1) +
                        " coincide");

  // Projective points normalised so the first nonzero coordinate is 1.
  std::map<std::array<Rational, 3>, std::set<int>> meet;
  for (int i = 0; i < d; ++i) {
    for (int k = i + 1; k < d; ++k) {
      const auto& a = lines[i].coeffs;
      const auto& b = lines[k].coeffs;
      std::array<Rational, 3> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                a[0] * b[1] - a[1] * b[0]};
      const Rational lead = p[0] != 0 ? p[0] : (p[1] != 0 ? p[1] : p[2]);
      for (auto& x : p) x /= lead;
      auto& on = meet[p];
      on.insert(i + 1);
      on.insert(k + 1);
    }
  }
  std::vector<std::vector<int>> points;
  for (const auto& [pt, on] : meet) points.emplace_back(on.begin(), on.end());
  return Arrangement::validate(std::move(points), d);
}

std::string to_string(ExceptionalClass::Kind kind) {
  switch (kind) {
    case ExceptionalClass::Kind::SingleLine: return "SingleLine";
    case ExceptionalClass::Kind::Pencil: return "Pencil";
    case ExceptionalClass::Kind::NearPencil: return "NearPencil";
    case ExceptionalClass::Kind::DoublePencil: return "DoublePencil";
    case ExceptionalClass::Kind::NonExceptional: return "NonExceptional";
  }
  return "?";
}

std::string to_string(const ExceptionalClass& cls) {
  std::string s = to_string(cls.kind) + " d=" + std::to_string(cls.d);
  if (cls.kind == ExceptionalClass::Kind::DoublePencil)
    s += " a=" + std::to_string(cls.a) + " b=" + std::to_string(cls.b);
  return s;
}

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "pencil") return Family::Pencil;
  if (name == "near_pencil") return Family::NearPencil;
  if (name == "double_pencil") return Family::DoublePencil;
  if (name == "generic") return Family::Generic;
  return std::nullopt;
}

Arrangement make_family(Family kind, int p1, int p2) {
  std::vector<std::vector<int>> pts;
  switch (kind) {
    case Family::Pencil: {
      if (p1 < 2) throw Error(ErrorCode::ParamOutOfRange, "pencil needs d >= 2");
      std::vector<int> all(p1);
      std::iota(all.begin(), all.end(), 1);
      pts.push_back(all);
      return Arrangement::validate(pts, p1);
    }
    case Family::NearPencil: {
      if (p1 < 3) throw Error(ErrorCode::ParamOutOfRange, "near-pencil needs d >= 3");
      std::vector<int> centre(p1 - 1);
      std::iota(centre.begin(), centre.end(), 1);
      pts.push_back(centre);
      for (int i = 1; i < p1; ++i) pts.push_back({i, p1});
      return Arrangement::validate(pts, p1);
    }
    case Family::DoublePencil: {
      const int a = p1;
      const int b = p2;
      if (b < 3 || a < b)
        throw Error(ErrorCode::ParamOutOfRange, "double pencil needs a >= b >= 3");
      const int d = a + b - 1;
      // Line 1 is shared; lines 2..a pass through the first centre, a+1..d through the second.
      std::vector<int> first{1}, second{1};
      for (int i = 2; i <= a; ++i) first.push_back(i);
      for (int i = a + 1; i <= d; ++i) second.push_back(i);
      pts.push_back(first);
      pts.push_back(second);
      for (int i = 2; i <= a; ++i)
        for (int k = a + 1; k <= d; ++k) pts.push_back({i, k});
      return Arrangement::validate(pts, d);
    }
    case Family::Generic: {
      if (p1 < 1) throw Error(ErrorCode::ParamOutOfRange, "generic arrangement needs d >= 1");
      for (int i = 1; i <= p1; ++i)
        for (int k = i + 1; k <= p1; ++k) pts.push_back({i, k});
      return Arrangement::validate(pts, p1);
    }
  }
  throw Error(ErrorCode::ParamOutOfRange, "unknown family");
}

ExceptionalClass classify(const Arrangement& arr) {
  using Kind = ExceptionalClass::Kind;
  const int d = arr.d();
  if (d == 1) return {Kind::SingleLine, 1, 0, 0};
  if (arr.point_count() == 1) return {Kind::Pencil, d, 0, 0};
  for (int line = 1; line <= d; ++line) {
    if (arr.points_on_line(line) != 2) continue;
    const auto on = arr.points_of_line(line);
    int a = arr.lines_through(on[0]);
    int b = arr.lines_through(on[1]);
    if (a < b) std::swap(a, b);
    if (b == 2) return {Kind::NearPencil, d, 0, 0};
    return {Kind::DoublePencil, d, a, b};
  }
  return {Kind::NonExceptional, d, 0, 0};
}

std::optional<std::vector<int>> isomorphic(const Incidence& a, const Incidence& b) {
  if (a.lines != b.lines || a.points.size() != b.points.size()) return std::nullopt;
  auto graph = [](const Incidence& inc) {
    const std::size_t n = inc.lines + inc.points.size();
    LabeledGraph g(n);
    for (std::size_t j = 0; j < inc.points.size(); ++j) {
      const std::size_t pj = inc.lines + j;
      g.color[pj] = 1;
      for (int line : inc.points[j]) {
        g.label[line - 1][pj] = 1;
        g.label[pj][line - 1] = 1;
      }
    }
    return g;
  };
  auto map = find_isomorphism(graph(a), graph(b));
  if (!map) return std::nullopt;
  map->resize(a.lines);
  return map;
}

}  // namespace milnor
