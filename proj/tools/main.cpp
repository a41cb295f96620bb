#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ekneg/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rule-based English-to-Korean negation transfer"};
  app.require_subcommand(1);

  std::string input, lexicons_dir, format = "text";
  bool trace = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "record file (one JSON record per line)")
        ->required();
    sub->add_option("--lexicons", lexicons_dir, "lexicon directory")->required();
  };

  CLI::App* translate = app.add_subcommand("translate", "translate records");
  add_common(translate);
  translate->add_option("--format", format, "text|delimited")
      ->check(CLI::IsMember({"text", "delimited"}));
  translate->add_flag("--trace", trace, "emit edit traces");

  CLI::App* goldtest = app.add_subcommand("goldtest", "compare against gold");
  add_common(goldtest);

  CLI::App* report = app.add_subcommand("report", "category census");
  add_common(report);

  CLI11_PARSE(app, argc, argv);

  ekneg::Lexicons lx;
  try {
    lx = ekneg::Lexicons::load(lexicons_dir);
  } catch (const std::exception& e) {
    std::cerr << "startup error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (translate->parsed()) {
      ekneg::RunOptions opts;
      opts.format = format == "delimited" ? ekneg::OutputFormat::Delimited
                                          : ekneg::OutputFormat::Text;
      opts.trace = trace;
      return ekneg::run_translate(input, lx, opts, std::cout, std::cerr);
    }
    if (goldtest->parsed())
      return ekneg::run_goldtest(input, lx, std::cout, std::cerr);
    if (report->parsed())
      return ekneg::run_report(input, lx, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "startup error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
