#pragma once

#include <iosfwd>
#include <string>

#include "ekneg/record.hpp"

namespace ekneg {

enum class OutputFormat { Text, Delimited };

struct RunOptions {
  OutputFormat format = OutputFormat::Text;
  bool trace = false;
};

struct TranslationResult {
  NegationAnalysis analysis;
  RealizedSentence realized;
};

// Full analyze -> plan -> realize chain for one record.
TranslationResult translate_record(const TransferRecord& rec, const Lexicons& lx);

// One output line per record in input order.  Malformed records produce an
// error line and a nonzero exit.  Returns the process exit code (0 or 1).
int run_translate(const std::string& input_path, const Lexicons& lx,
                  const RunOptions& opts, std::ostream& out, std::ostream& err);

// Byte-exact comparison of every record against its gold sentence.
int run_goldtest(const std::string& input_path, const Lexicons& lx,
                 std::ostream& out, std::ostream& err);

// Structure/kind census over the corpus in fixed column order.
int run_report(const std::string& input_path, const Lexicons& lx,
               std::ostream& out, std::ostream& err);

}  // namespace ekneg
