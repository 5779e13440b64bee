#include "doctest.h"
#include "milnor/batch.hpp"

using namespace milnor;

TEST_CASE("parallel matches serial") {
  auto entries = corpus(8);
  auto s = roundtrip_serial(entries);
  auto p = roundtrip_parallel(entries);
  REQUIRE(s.size() == entries.size());
  CHECK(s == p);
  for (const auto& r : s) CHECK_MESSAGE(r.ok, r.key << " " << r.summary);
}

TEST_CASE("table") {
  auto rows = roundtrip_serial({{"pencil-05", make_family(Family::Pencil, 5)}});
  auto t = format_table(rows);
  CHECK(t == "key\texpected\tok\tmoves\tsummary\npencil-05\tPencil d=5\tyes\t" + std::to_string(rows[0].moves) +
                 "\tclass=Pencil d=5 components=16 iso=yes\n");
}
