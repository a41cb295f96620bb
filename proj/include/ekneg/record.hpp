#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekneg/generator.hpp"

namespace ekneg {

// One corpus line: an annotated English sentence paired with the structured
// Korean affirmative frame, plus optional gold output and expectations.
struct TransferRecord {
  std::string id;
  std::string provenance;
  AnnotatedSentence english;
  KoreanFrame frame;
  std::optional<std::string> gold;
  std::optional<NegKind> expect_kind;
  std::optional<Structure> expect_structure;
};

// Parses one JSON object (one line of a .jsonl corpus file).
TransferRecord parse_record(const std::string& json_line);
std::string serialize_record(const TransferRecord& rec);

// Reads a whole corpus file; throws EknegError with the offending line number
// on malformed input, and on duplicate ids.
std::vector<TransferRecord> load_corpus(const std::string& path);

struct CategoryReport {
  // Structure counts in fixed column order; NS-NP-NO and NonNegative records
  // fall under Others.
  std::map<std::string, int> structure_counts;
  std::map<std::string, int> kind_counts;
  int total = 0;
  int negative = 0;

  static const std::vector<std::string>& columns();
  void add(const NegationAnalysis& analysis);
  std::string format() const;
};

}  // namespace ekneg
