#include <numeric>
#include <utility>
#include <vector>

#include "doctest.h"
#include "milnor/cfrac.hpp"
#include "milnor/error.hpp"

using namespace milnor;
using Seq = std::vector<std::int64_t>;

namespace {

// Test-side oracle: evaluate right to left as a pair (num, den) in plain
// integers, no library rationals involved.
std::pair<std::int64_t, std::int64_t> oracle_eval(const Seq& ks) {
  std::int64_t num = ks.back();
  std::int64_t den = 1;
  for (auto it = ks.rbegin() + 1; it != ks.rend(); ++it) {
    // k - den/num = (k num - den) / num
    const std::int64_t next_num = *it * num - den;
    den = num;
    num = next_num;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

TEST_CASE("expand_ncf examples") {
  CHECK(expand_ncf(5, 3).entries == Seq{2, 3});
  CHECK(expand_ncf(5, 2).entries == Seq{3, 2});
  CHECK(expand_ncf(7, 1).entries == Seq{7});
  CHECK(oracle_eval({2, 3}) == std::pair<std::int64_t, std::int64_t>{5, 3});
  CHECK(oracle_eval({3, 2}) == std::pair<std::int64_t, std::int64_t>{5, 2});
}

TEST_CASE("expand_ncf reduces and rejects out-of-range input") {
  auto e = expand_ncf(4, 2);
  CHECK(e.entries == Seq{2});
  CHECK(e.p == 2);
  CHECK(e.q == 1);
  CHECK_THROWS_AS(expand_ncf(3, 3), Error);
  CHECK_THROWS_AS(expand_ncf(3, 0), Error);
  CHECK_THROWS_AS(expand_ncf(3, 5), Error);
}

TEST_CASE("eval_ncf examples") {
  CHECK(eval_ncf(Seq{2, 3}) == Rational(5, 3));
  CHECK(eval_ncf(Seq{2, 2, 2}) == Rational(4, 3));
  CHECK(eval_ncf(Seq{9}) == Rational(9));
  // [1,1] = 1 - 1/1 = 0 is fine; [1,1,1] divides by it.
  CHECK(eval_ncf(Seq{1, 1}) == Rational(0));
  CHECK_THROWS_AS(eval_ncf(Seq{1, 1, 1}), Error);
  CHECK_THROWS_AS(eval_ncf(Seq{}), Error);
}

TEST_CASE("dual_ncf examples") {
  CHECK(dual_ncf(Seq{2, 3}).entries == Seq{3, 2});
  CHECK(dual_ncf(Seq{2}).entries == Seq{2});
  CHECK(dual_ncf(Seq{4, 2}).entries == Seq{2, 2, 3});
  CHECK(expand_ncf(7, 5).entries == Seq{2, 2, 3});
  CHECK(run_length_dual(Seq{2, 3, 2}) == Seq{3, 3});
  CHECK(run_length_dual(Seq{3, 3}) == Seq{2, 3, 2});
}

TEST_CASE("round trip, involution and run-length agreement for p <= 200") {
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto e = expand_ncf(p, q);
      for (auto k : e.entries) REQUIRE(k >= 2);
      REQUIRE(oracle_eval(e.entries) == std::pair<std::int64_t, std::int64_t>{p, q});
      REQUIRE(eval_ncf(e.entries) == Rational(p, q));
      const auto dual = dual_ncf(e.entries);
      REQUIRE(dual.entries == expand_ncf(p, p - q).entries);
      REQUIRE(dual_ncf(dual.entries).entries == e.entries);
      REQUIRE(run_length_dual(e.entries) == dual.entries);
    }
  }
}

TEST_CASE("string_multiplicities examples") {
  auto s = string_multiplicities(5, 3);
  CHECK(s.eulers == Seq{3, 2});
  CHECK(s.mults == Seq{1, 1, 2, 3});
  CHECK(s.neighbor_mult == 2);

  s = string_multiplicities(6, 3);
  CHECK(s.eulers == Seq{2});
  CHECK(s.mults == Seq{1, 1, 1});
  CHECK(s.neighbor_mult == 1);

  s = string_multiplicities(4, 2);
  CHECK(s.eulers == Seq{2});
  CHECK(s.point_mult == 1);
  CHECK(s.mults == Seq{1, 1, 1});
  CHECK(s.neighbor_mult == 1);

  CHECK_THROWS_AS(string_multiplicities(4, 4), Error);
  CHECK_THROWS_AS(string_multiplicities(4, 1), Error);
}

TEST_CASE("string multiplicities solve the recursion with non-decreasing steps") {
  for (std::int64_t d = 3; d <= 120; ++d) {
    for (std::int64_t n = 2; n < d; ++n) {
      const auto s = string_multiplicities(d, n);
      REQUIRE(s.mults.size() == s.eulers.size() + 2);
      for (std::size_t l = 1; l + 1 < s.mults.size(); ++l) {
        REQUIRE(s.eulers[l - 1] * s.mults[l] - s.mults[l - 1] - s.mults[l + 1] == 0);
      }
      for (std::size_t l = 1; l + 1 < s.mults.size(); ++l) {
        REQUIRE(s.mults[l] - s.mults[l - 1] <= s.mults[l + 1] - s.mults[l]);
      }
      REQUIRE(s.mults.back() == n / std::gcd(d, n));
    }
  }
}
