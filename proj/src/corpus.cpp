#include "milnor/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "milnor/error.hpp"

namespace milnor {

namespace {

using Blocks = std::vector<std::vector<int>>;  // 0-based lines, blocks of size >= 2

// Cheap isomorphism invariant: sorted block sizes, then per line the sorted
// sizes of the blocks through it.
std::vector<int> invariant(int d, const Blocks& blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  std::sort(out.begin(), out.end());
  std::vector<std::vector<int>> per(d);
  for (const auto& b : blocks)
    for (int x : b) per[x].push_back(static_cast<int>(b.size()));
  for (auto& p : per) std::sort(p.begin(), p.end());
  std::sort(per.begin(), per.end());
  for (const auto& p : per) {
    out.push_back(-1);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

Incidence to_incidence(int d, const Blocks& blocks) {
  Incidence inc{d, {}};
  for (const auto& b : blocks) {
    std::vector<int> p;
    for (int x : b) p.push_back(x + 1);
    std::sort(p.begin(), p.end());
    inc.points.push_back(p);
  }
  std::sort(inc.points.begin(), inc.points.end());
  return inc;
}

// Extensions of `base` on d - 1 lines by a new line x = d - 1: x joins a set
// of pairwise disjoint blocks and meets every other line in a new double point.
void extend(int d, const Blocks& base, std::size_t from, std::vector<bool>& used_line,
            Blocks& current, std::vector<Blocks>& out) {
  if (from == base.size()) {
    Blocks b = current;
    for (int y = 0; y < d - 1; ++y)
      if (!used_line[y]) b.push_back({y, d - 1});
    out.push_back(std::move(b));
    return;
  }
  // Leave base[from] alone.
  current.push_back(base[from]);
  extend(d, base, from + 1, used_line, current, out);
  current.pop_back();
  // Or put x on it.
  const auto& blk = base[from];
  if (std::none_of(blk.begin(), blk.end(), [&](int y) { return used_line[y]; })) {
    for (int y : blk) used_line[y] = true;
    auto grown = blk;
    grown.push_back(d - 1);
    current.push_back(grown);
    extend(d, base, from + 1, used_line, current, out);
    current.pop_back();
    for (int y : blk) used_line[y] = false;
  }
}

std::vector<Blocks> classes(int d) {
  if (d == 1) return {Blocks{}};
  std::vector<Blocks> out;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (const auto& base : classes(d - 1)) {
    std::vector<Blocks> ext;
    std::vector<bool> used(d - 1, false);
    Blocks cur;
    extend(d, base, 0, used, cur, ext);
    for (auto& b : ext) {
      auto key = invariant(d, b);
      auto& bucket = buckets[key];
      const auto inc = to_incidence(d, b);
      const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
        return isomorphic(to_incidence(d, out[i]), inc).has_value();
      });
      if (!seen) {
        bucket.push_back(out.size());
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

RationalLine line_through(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) {
  return {{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]}};
}

}  // namespace

std::vector<Arrangement> linear_spaces(int d) {
  if (d < 1) throw Error(ErrorCode::ParamOutOfRange, "linear_spaces needs d >= 1");
  std::vector<Arrangement> out;
  for (const auto& b : classes(d)) out.push_back(Arrangement::validate(to_incidence(d, b)));
  std::sort(out.begin(), out.end(), [](const Arrangement& x, const Arrangement& y) {
    if (x.point_count() != y.point_count()) return x.point_count() < y.point_count();
    return x.points() < y.points();
  });
  return out;
}

std::vector<RationalLine> pappus_lines() {
  using P = std::array<Rational, 3>;
  const P a1{0, 0, 1}, a2{1, 0, 1}, a3{3, 0, 1};
  const P b1{0, 1, 1}, b2{2, 1, 1}, b3{5, 1, 1};
  std::vector<RationalLine> out{line_through(a1, a3), line_through(b1, b3)};
  for (const auto& [p, q] : std::vector<std::pair<P, P>>{
           {a1, b2}, {a1, b3}, {a2, b1}, {a2, b3}, {a3, b1}, {a3, b2}})
    out.push_back(line_through(p, q));
  // The Pappus line through the three cross intersections.
  auto meet = [](const RationalLine& l, const RationalLine& m) {
    const auto& x = l.coeffs;
    const auto& y = m.coeffs;
    return P{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
  };
  const P z1 = meet(out[2], out[4]);  // a1b2 . a2b1
  const P z2 = meet(out[3], out[6]);  // a1b3 . a3b1
  out.push_back(line_through(z1, z2));
  return out;
}

std::vector<RationalLine> ceva_lines() {
  return {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}, {{1, -1, 0}}, {{1, 0, -1}}, {{0, 1, -1}}};
}

Arrangement pappus() { return from_lines(pappus_lines()); }
Arrangement ceva() { return from_lines(ceva_lines()); }

Arrangement broken_pappus() {
  const Arrangement p = pappus();
  std::vector<std::vector<int>> pts;
  bool broken = false;
  for (const auto& pt : p.points()) {
    if (!broken && pt.size() == 3) {
      pts.push_back({pt[0], pt[1]});
      pts.push_back({pt[0], pt[2]});
      pts.push_back({pt[1], pt[2]});
      broken = true;
    } else {
      pts.push_back(pt);
    }
  }
  return Arrangement::validate(pts, p.d());
}

std::vector<CorpusEntry> corpus(int max_d) {
  std::vector<CorpusEntry> out;
  char buf[64];
  for (int d = 2; d <= max_d; ++d) {
    std::snprintf(buf, sizeof buf, "pencil-%02d", d);
    out.push_back({buf, make_family(Family::Pencil, d)});
  }
  for (int d = 3; d <= max_d; ++d) {
    std::snprintf(buf, sizeof buf, "near_pencil-%02d", d);
    out.push_back({buf, make_family(Family::NearPencil, d)});
  }
  for (int a = 3; a <= max_d; ++a)
    for (int b = 3; b <= a && a + b - 1 <= max_d; ++b) {
      std::snprintf(buf, sizeof buf, "double_pencil-%02d-%02d", a, b);
      out.push_back({buf, make_family(Family::DoublePencil, a, b)});
    }
  for (int d = 1; d <= max_d; ++d) {
    std::snprintf(buf, sizeof buf, "generic-%02d", d);
    out.push_back({buf, make_family(Family::Generic, d)});
  }
  for (int d = 1; d <= std::min(max_d, 7); ++d) {
    const auto spaces = linear_spaces(d);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      std::snprintf(buf, sizeof buf, "space-%02d-%02zu", d, i);
      out.push_back({buf, spaces[i]});
    }
  }
  if (max_d >= 6) out.push_back({"fixture-ceva", ceva()});
  if (max_d >= 9) out.push_back({"fixture-pappus", pappus()});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
  return out;
}

std::vector<CorpusEntry> nonexceptional_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus(9)) {
    if (e.key.rfind("space-", 0) != 0 && e.key.rfind("fixture-", 0) != 0) continue;
    if (classify(e.arr).kind == ExceptionalClass::Kind::NonExceptional) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace milnor
