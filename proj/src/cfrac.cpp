#include "milnor/cfrac.hpp"

#include <numeric>
#include <string>

#include "milnor/error.hpp"

namespace milnor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PairAxiomViolation: return "PairAxiomViolation";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InconsistentRecursion: return "InconsistentRecursion";
    case ErrorCode::MissingMultiplicities: return "MissingMultiplicities";
    case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::Unrecognized: return "Unrecognized";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NoValidBipartition: return "NoValidBipartition";
    case ErrorCode::AmbiguousBipartition: return "AmbiguousBipartition";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

NcfExpansion expand_ncf(std::int64_t p, std::int64_t q) {
  if (q <= 0 || q >= p) {
    throw Error(ErrorCode::DomainError,
                "expand_ncf needs 0 < q < p, got " + std::to_string(p) + "/" + std::to_string(q));
  }
  const std::int64_t g = std::gcd(p, q);
  NcfExpansion out;
  out.p = p / g;
  out.q = q / g;
  std::int64_t a = out.p;
  std::int64_t b = out.q;
  // k = ceil(a/b), (a, b) <- (b, k b - a); stops when b divides a.
  while (b > 0) {
    const std::int64_t k = (a + b - 1) / b;
    out.entries.push_back(k);
    const std::int64_t next = k * b - a;
    a = b;
    b = next;
  }
  return out;
}

Rational eval_ncf(std::span<const std::int64_t> entries) {
  if (entries.empty()) throw Error(ErrorCode::DomainError, "eval_ncf of an empty sequence");
  Rational value = entries.back();
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (value == 0) throw Error(ErrorCode::DivisionByZero, "vanishing tail in continued fraction");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

NcfExpansion dual_ncf(std::span<const std::int64_t> entries) {
  const Rational value = eval_ncf(entries);
  const BigInt p = boost::multiprecision::numerator(value);
  const BigInt q = boost::multiprecision::denominator(value);
  if (q <= 0 || q >= p) throw Error(ErrorCode::DomainError, "dual_ncf of a value <= 1");
  return expand_ncf(static_cast<std::int64_t>(p), static_cast<std::int64_t>(p - q));
}

std::vector<std::int64_t> run_length_dual(std::span<const std::int64_t> entries) {
  // Split as 2^{m_0} a_1 2^{m_1} ... a_t 2^{m_t} with every a_i >= 3.
  std::vector<std::int64_t> runs{0};
  std::vector<std::int64_t> bigs;
  for (std::int64_t k : entries) {
    if (k < 2) throw Error(ErrorCode::DomainError, "run_length_dual needs entries >= 2");
    if (k == 2) {
      ++runs.back();
    } else {
      bigs.push_back(k);
      runs.push_back(0);
    }
  }
  if (bigs.empty()) return {runs.front() + 1};

  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const bool end = i == 0 || i + 1 == runs.size();
    out.push_back(runs[i] + (end ? 2 : 3));
    if (i < bigs.size()) out.insert(out.end(), static_cast<std::size_t>(bigs[i] - 3), 2);
  }
  return out;
}

StringData string_multiplicities(std::int64_t d, std::int64_t n) {
  if (n < 2 || n >= d) {
    throw Error(ErrorCode::DomainError,
                "string_multiplicities needs 2 <= n < d, got n=" + std::to_string(n) +
                    " d=" + std::to_string(d));
  }
  StringData out;
  out.eulers = expand_ncf(d, d - n).entries;
  out.point_mult = n / std::gcd(d, n);

  // n + lambda = m_1 d with lambda = d - n, hence m_1 = 1.
  out.mults = {1, 1};
  for (std::size_t l = 0; l < out.eulers.size(); ++l) {
    const std::int64_t m = out.eulers[l] * out.mults[l + 1] - out.mults[l];
    out.mults.push_back(m);
  }
  if (out.mults.back() != out.point_mult) {
    throw Error(ErrorCode::InconsistentRecursion,
                "string for d=" + std::to_string(d) + " n=" + std::to_string(n) + " ends at " +
                    std::to_string(out.mults.back()) + " instead of " +
                    std::to_string(out.point_mult));
  }
  for (std::int64_t m : out.mults) {
    if (m <= 0) throw Error(ErrorCode::InconsistentRecursion, "non-positive string multiplicity");
  }
  out.neighbor_mult = out.mults[out.mults.size() - 2];
  return out;
}

}  // namespace milnor
