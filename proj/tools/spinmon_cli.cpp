#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinmon/scalars.hpp"
#include "spinmon/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites and tables for spin symmetric monoidal structures"};
  app.require_subcommand(1);

  spinmon::SuiteParams params;
  std::string suite;
  std::string format = "json";
  bool timings = false;
  std::vector<std::string> suites = spinmon::suite_names();
  suites.push_back("all");
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--q", params.q, "Grading modulus")->capture_default_str()->check(CLI::IsMember({2, 4, 8, 16}));
  verify->add_option("--max-rank", params.max_rank, "Rank bound")->capture_default_str()->check(CLI::Range(1, 8));
  verify->add_option("--trials", params.trials, "Seeded trial count")->capture_default_str()->check(CLI::Range(1, 1000));
  verify->add_option("--seed", params.seed, "Random seed")->capture_default_str();
  verify->add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timings", timings, "Include per-check wall times");

  std::string kind;
  int max_degree = 6;
  std::string table_format = "csv";
  CLI::App* table = app.add_subcommand("table", "Print a table");
  table->add_option("kind", kind, "Table kind")->required()->check(CLI::IsMember(spinmon::table_kinds()));
  table->add_option("--max-degree", max_degree, "Degree bound")->capture_default_str();
  table->add_option("--format", table_format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    CLI::App* sub = verify->parsed() ? verify : table->parsed() ? table : &app;
    std::cerr << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  }

  try {
    if (*verify) {
      spinmon::SuiteReport r = spinmon::run_suite(suite, params);
      if (format == "json")
        std::cout << spinmon::report_json(r, timings).dump(2) << "\n";
      else
        std::cout << spinmon::report_text(r, timings);
      return r.pass() ? kExitPass : kExitFail;
    }
    spinmon::Table t = spinmon::make_table(kind, max_degree);
    if (table_format == "json")
      std::cout << spinmon::table_json(t).dump(2) << "\n";
    else
      std::cout << spinmon::table_csv(t);
    return kExitPass;
  } catch (const spinmon::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << (*verify ? verify : table)->help();
    return kExitUsage;
  }
}
