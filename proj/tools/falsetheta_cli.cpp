// Command line front end: runs verification suites and emits reports.
// Exit codes: 0 all checks equal (or skipped), 1 at least one mismatch,
// 2 usage or selection errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "falsetheta/suites.hpp"

namespace {

int write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot open " << tmp << " for writing\n";
      return 2;
    }
    out << content;
    if (!out.flush()) {
      std::cerr << "error: short write to " << tmp << "\n";
      return 2;
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::cerr << "error: cannot move " << tmp << " into place\n";
    std::remove(tmp.c_str());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric verification of false theta function identities"};
  app.require_subcommand(1);

  falsetheta::SuiteOptions options;
  long order = 0;
  std::string format = "text";
  std::string out_path;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_help = "suite to run: all";
  for (const std::string& name : falsetheta::suite_names()) suite_help += ", " + name;
  verify->add_option("--suite", options.suite, suite_help)->capture_default_str();
  verify->add_option("--m", options.grid.m_values, "restrict the m grid");
  verify->add_option("--a", options.grid.a_values, "restrict the a grid");
  verify->add_option("--N", options.grid.n_values, "restrict the root-order grid");
  verify->add_option("--M", options.grid.m_root_values, "restrict the root-exponent grid");
  verify->add_option("--order", order,
                     "series truncation order (default 60 for series, 40 for bailey)");
  verify->add_option("--nmax", options.pair_n_max, "largest pair index checked")
      ->capture_default_str();
  verify->add_option("--transform-nmax", options.transform_n_max,
                     "largest finite-transform index checked")
      ->capture_default_str();
  verify->add_option("--tolerance", options.tolerance, "radial extrapolation tolerance")
      ->capture_default_str();
  verify->add_option("--jobs", options.jobs, "worker threads (0 = hardware)")
      ->envname("FALSETHETA_JOBS")
      ->capture_default_str();
  verify->add_option("--format", format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify->add_option("--out", out_path, "write the report to this file (atomically)");

  CLI::App* schema = app.add_subcommand("schema", "print the json report schema");
  CLI::App* suites = app.add_subcommand("suites", "list available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (schema->parsed()) {
    std::cout << falsetheta::report_schema();
    return 0;
  }
  if (suites->parsed()) {
    std::cout << "all\n";
    for (const std::string& name : falsetheta::suite_names()) std::cout << name << "\n";
    return 0;
  }

  if (order > 0) {
    options.series_order = order;
    options.pair_order = order;
  } else if (order < 0) {
    std::cerr << "error: --order must be positive\n";
    return 2;
  }

  try {
    const std::vector<falsetheta::VerificationRecord> records = falsetheta::run_suite(options);
    std::string content;
    if (format == "json") {
      content = falsetheta::records_to_json(records);
    } else if (format == "csv") {
      content = falsetheta::records_to_csv(records);
    } else {
      content = falsetheta::records_to_text(records);
    }
    const int write_status = write_output(content, out_path);
    if (write_status != 0) return write_status;
    if (!out_path.empty()) {
      const falsetheta::ReportSummary s = falsetheta::summarize(records);
      std::cerr << s.total << " checks: " << s.equal << " equal, " << s.mismatch
                << " mismatch, " << s.skipped << " skipped -> " << out_path << "\n";
    }
    return falsetheta::all_equal_or_skipped(records) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
