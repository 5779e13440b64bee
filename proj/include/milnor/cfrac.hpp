#pragma once

// Negative (Hirzebruch-Jung) continued fractions
//
//   [k_1, ..., k_s] = k_1 - 1/(k_2 - 1/(... - 1/k_s))
//
// and the multiplicity recursion carried by the strings of the Milnor-fiber
// boundary graph.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace milnor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A negative continued fraction expansion together with its reduced value p/q.
struct NcfExpansion {
  std::vector<std::int64_t> entries;
  std::int64_t p = 1;
  std::int64_t q = 0;

  friend bool operator==(const NcfExpansion&, const NcfExpansion&) = default;
};

/// Expansion of p/q for 0 < q < p. The fraction is reduced first.
NcfExpansion expand_ncf(std::int64_t p, std::int64_t q);

/// Exact value of an arbitrary integer sequence. Throws DivisionByZero when an
/// intermediate tail evaluates to zero, DomainError on an empty sequence.
Rational eval_ncf(std::span<const std::int64_t> entries);

/// expand_ncf(p, p - q) for entries == expand_ncf(p, q).
NcfExpansion dual_ncf(std::span<const std::int64_t> entries);

/// Riemenschneider-style run-length transform. Writing the entries as
/// 2^{m_0} a_1 2^{m_1} ... a_t 2^{m_t} with every a_i >= 3, the dual is
/// (m_0+2) 2^{a_1-3} (m_1+3) ... 2^{a_t-3} (m_t+2), and [m_0+1] when t = 0.
/// Computed without any division; used as the second route for dual_ncf.
std::vector<std::int64_t> run_length_dual(std::span<const std::int64_t> entries);

/// The string joining a line vertex and a point vertex in the boundary graph.
struct StringData {
  std::vector<std::int64_t> eulers;  // k_1..k_s, k_1 next to the line vertex
  std::vector<std::int64_t> mults;   // m_0..m_{s+1}
  std::int64_t point_mult = 0;       // m_j = n_j / c_j
  std::int64_t neighbor_mult = 0;    // m'_j = m_s
};

/// Euler numbers expand_ncf(d, d - n) and multiplicities m_0 = m_1 = 1,
/// k_l m_l = m_{l-1} + m_{l+1}, ending in m_{s+1} = n / gcd(d, n).
StringData string_multiplicities(std::int64_t d, std::int64_t n);

}  // namespace milnor
