#pragma once

// Round trips over many arrangements. The OpenMP version fans out one
// instance per iteration; the serial one is the reference.

#include <string>
#include <vector>

#include "milnor/corpus.hpp"
#include "milnor/reconstruct.hpp"

namespace milnor {

struct BatchRow {
  std::string key;
  std::string expected;  // to_string(classify(A))
  std::string summary;   // RoundtripReport::summary(), or "error: ..."
  std::size_t moves = 0;
  bool ok = false;

  friend bool operator==(const BatchRow&, const BatchRow&) = default;
};

std::vector<BatchRow> roundtrip_serial(const std::vector<CorpusEntry>& entries);
std::vector<BatchRow> roundtrip_parallel(const std::vector<CorpusEntry>& entries);

/// TSV with a header line: key, expected, ok, moves, summary.
std::string format_table(const std::vector<BatchRow>& rows);

}  // namespace milnor
