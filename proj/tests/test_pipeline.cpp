#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"

using namespace ekneg;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("goldtest passes the whole corpus") {
    std::ostringstream out, err;
    int rc = run_goldtest(test::gold_path(), test::lexicons(), out, err);
    CHECK(rc == 0);
    CHECK(out.str().find("41/41 passed") != std::string::npos);
    CHECK(err.str().empty());
  }

  TEST_CASE("translate emits one line per record in input order") {
    std::ostringstream out, err;
    RunOptions opts;
    opts.format = OutputFormat::Delimited;
    int rc = run_translate(test::gold_path(), test::lexicons(), opts, out, err);
    CHECK(rc == 0);
    std::istringstream lines(out.str());
    std::string line;
    std::vector<std::string> ids;
    while (std::getline(lines, line))
      ids.push_back(line.substr(0, line.find('\t')));
    REQUIRE(ids.size() == test::gold_corpus().size());
    CHECK(ids.size() >= 20);
    for (size_t i = 0; i < ids.size(); ++i)
      CHECK(ids[i] == test::gold_corpus()[i].id);
  }

  TEST_CASE("empty input file is a vacuous success") {
    std::string path = write_temp("ekneg_empty.jsonl", "");
    std::ostringstream out, err;
    int rc = run_translate(path, test::lexicons(), RunOptions{}, out, err);
    CHECK(rc == 0);
    CHECK(out.str().empty());
  }

  TEST_CASE("corrupted gold is reported with a diff") {
    TransferRecord rec = test::record("we-dosupport");
    rec.gold = "그는 아침 일찍 일어난다.";  // wrong on purpose
    std::string path = write_temp("ekneg_badgold.jsonl", serialize_record(rec) + "\n");
    std::ostringstream out, err;
    int rc = run_goldtest(path, test::lexicons(), out, err);
    CHECK(rc == 1);
    CHECK(out.str().find("FAIL we-dosupport") != std::string::npos);
    CHECK(out.str().find("expected: 그는 아침 일찍 일어난다.") != std::string::npos);
    CHECK(out.str().find("actual:   그는 아침 일찍 일어나지 않는다.") != std::string::npos);
    CHECK(out.str().find("0/1 passed") != std::string::npos);
  }

  TEST_CASE("record without gold counts as a goldtest failure") {
    TransferRecord rec = test::record("we-dosupport");
    rec.gold.reset();
    std::string path = write_temp("ekneg_nogold.jsonl", serialize_record(rec) + "\n");
    std::ostringstream out, err;
    int rc = run_goldtest(path, test::lexicons(), out, err);
    CHECK(rc == 1);
    CHECK(out.str().find("no gold sentence") != std::string::npos);
  }

  TEST_CASE("malformed record lines produce error lines and exit 1") {
    std::string good = serialize_record(test::record("we-dosupport"));
    std::string path =
        write_temp("ekneg_malformed.jsonl", good + "\n{broken json\n");
    std::ostringstream out, err;
    int rc = run_translate(path, test::lexicons(), RunOptions{}, out, err);
    CHECK(rc == 1);
    CHECK(out.str().find("we-dosupport") != std::string::npos);
    CHECK(err.str().find(":2: error") != std::string::npos);
  }

  TEST_CASE("unknown pattern and tense pair is named in the error line") {
    TransferRecord rec = test::record("t1-never-1");
    rec.id = "future-perfect";
    rec.gold.reset();
    rec.frame.predicate.tense = Tense::Future;  // perfect + future: no table row
    std::string path = write_temp("ekneg_unsup.jsonl", serialize_record(rec) + "\n");
    std::ostringstream out, err;
    int rc = run_translate(path, test::lexicons(), RunOptions{}, out, err);
    CHECK(rc == 1);
    CHECK(err.str().find("future-perfect") != std::string::npos);
    CHECK(err.str().find("NJeokIEopda") != std::string::npos);
    CHECK(err.str().find("Future") != std::string::npos);
  }

  TEST_CASE("repeated runs are byte-identical") {
    std::ostringstream a, b, err;
    RunOptions opts;
    opts.trace = true;
    run_translate(test::gold_path(), test::lexicons(), opts, a, err);
    run_translate(test::gold_path(), test::lexicons(), opts, b, err);
    CHECK(a.str() == b.str());
    REQUIRE_FALSE(a.str().empty());

    std::ostringstream r1, r2;
    run_report(test::gold_path(), test::lexicons(), r1, err);
    run_report(test::gold_path(), test::lexicons(), r2, err);
    CHECK(r1.str() == r2.str());
  }

  TEST_CASE("report matches the hand tally of the corpus") {
    std::ostringstream out, err;
    int rc = run_report(test::gold_path(), test::lexicons(), out, err);
    CHECK(rc == 0);
    CHECK(out.str().find("13\t17\t7\t0\t0\t1\t3") != std::string::npos);
    CHECK(out.str().find("Double=1") != std::string::npos);
    CHECK(out.str().find("Partial=7") != std::string::npos);
  }
}
