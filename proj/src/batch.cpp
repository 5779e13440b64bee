#include "milnor/batch.hpp"

#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

namespace {

BatchRow run_one(const CorpusEntry& e) {
  BatchRow row;
  row.key = e.key;
  row.expected = to_string(classify(e.arr));
  try {
    const auto rep = roundtrip(e.arr);
    row.summary = rep.summary();
    row.moves = rep.moves;
    row.ok = rep.iso;
  } catch (const Error& err) {
    row.summary = std::string("error: ") + err.what();
  }
  return row;
}

}  // namespace

std::vector<BatchRow> roundtrip_serial(const std::vector<CorpusEntry>& entries) {
  std::vector<BatchRow> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back(run_one(e));
  return rows;
}

std::vector<BatchRow> roundtrip_parallel(const std::vector<CorpusEntry>& entries) {
  std::vector<BatchRow> rows(entries.size());
  const auto n = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) rows[i] = run_one(entries[i]);
  return rows;
}

std::string format_table(const std::vector<BatchRow>& rows) {
  std::ostringstream os;
  os << "key\texpected\tok\tmoves\tsummary\n";
  for (const auto& r : rows)
    os << r.key << '\t' << r.expected << '\t' << (r.ok ? "yes" : "no") << '\t' << r.moves << '\t'
       << r.summary << '\n';
  return os.str();
}

}  // namespace milnor
