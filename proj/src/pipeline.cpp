#include "ekneg/pipeline.hpp"

#include <fstream>
#include <ostream>
#include <set>

namespace ekneg {

namespace {

// Applies `fn` to every non-comment line.  Parse failures are reported
// through `on_error` so one bad record does not abort the run.
template <typename Fn, typename ErrFn>
void for_each_record(const std::string& path, Fn fn, ErrFn on_error) {
  std::ifstream in(path);
  if (!in) throw EknegError("cannot open corpus file: " + path);
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      TransferRecord rec = parse_record(line);
      if (!ids.insert(rec.id).second)
        throw EknegError("duplicate record id: " + rec.id);
      fn(rec);
    } catch (const std::exception& e) {
      on_error(lineno, e.what());
    }
  }
}

}  // namespace

TranslationResult translate_record(const TransferRecord& rec, const Lexicons& lx) {
  TranslationResult res;
  res.analysis = analyze(rec.english, lx);
  if (res.analysis.kind == NegKind::NonNegative) {
    res.realized = realize(rec.frame, std::nullopt, lx.conjugation());
  } else {
    TransformPlan p = plan(res.analysis, rec.frame, lx);
    res.realized = realize(rec.frame, p, lx.conjugation());
  }
  return res;
}

int run_translate(const std::string& input_path, const Lexicons& lx,
                  const RunOptions& opts, std::ostream& out, std::ostream& err) {
  int failures = 0;
  for_each_record(
      input_path,
      [&](const TransferRecord& rec) {
        try {
          TranslationResult res = translate_record(rec, lx);
          if (opts.format == OutputFormat::Delimited) {
            out << rec.id << '\t' << res.realized.text << '\t'
                << to_string(res.analysis.kind) << '\t'
                << to_string(res.analysis.structure) << '\n';
          } else {
            out << rec.id << ": " << res.realized.text << " ("
                << to_string(res.analysis.kind) << ", "
                << to_string(res.analysis.structure) << ")\n";
          }
          if (opts.trace) {
            for (const auto& step : res.realized.trace)
              out << "    " << step << '\n';
          }
        } catch (const std::exception& e) {
          err << rec.id << ": error: " << e.what() << '\n';
          ++failures;
        }
      },
      [&](int lineno, const char* what) {
        err << input_path << ":" << lineno << ": error: " << what << '\n';
        ++failures;
      });
  return failures == 0 ? 0 : 1;
}

int run_goldtest(const std::string& input_path, const Lexicons& lx,
                 std::ostream& out, std::ostream& err) {
  int total = 0, passed = 0;
  for_each_record(
      input_path,
      [&](const TransferRecord& rec) {
        ++total;
        if (!rec.gold) {
          out << "FAIL " << rec.id << " (no gold sentence in record)\n";
          return;
        }
        try {
          TranslationResult res = translate_record(rec, lx);
          if (res.realized.text == *rec.gold) {
            ++passed;
          } else {
            out << "FAIL " << rec.id << '\n'
                << "  expected: " << *rec.gold << '\n'
                << "  actual:   " << res.realized.text << '\n';
          }
        } catch (const std::exception& e) {
          out << "FAIL " << rec.id << " (error: " << e.what() << ")\n";
        }
      },
      [&](int lineno, const char* what) {
        ++total;
        err << input_path << ":" << lineno << ": error: " << what << '\n';
      });
  out << "goldtest: " << passed << "/" << total << " passed\n";
  return passed == total ? 0 : 1;
}

int run_report(const std::string& input_path, const Lexicons& lx,
               std::ostream& out, std::ostream& err) {
  CategoryReport report;
  int failures = 0;
  for_each_record(
      input_path,
      [&](const TransferRecord& rec) {
        try {
          report.add(analyze(rec.english, lx));
        } catch (const std::exception& e) {
          err << rec.id << ": error: " << e.what() << '\n';
          ++failures;
        }
      },
      [&](int lineno, const char* what) {
        err << input_path << ":" << lineno << ": error: " << what << '\n';
        ++failures;
      });
  out << report.format();
  return failures == 0 ? 0 : 1;
}

}  // namespace ekneg
