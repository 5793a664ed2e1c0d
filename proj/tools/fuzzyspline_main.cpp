// Command line front end: validate datasets, print the stage table and
// export the stage curves as SVG plus sample files.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fuzzyspline/commands.hpp"
#include "fuzzyspline/dataset_io.hpp"
#include "fuzzyspline/errors.hpp"

namespace fs = fuzzyspline;

int main(int argc, char** argv) {
  CLI::App app{"Perfectly normal type-2 fuzzy data points and their interpolating B-spline curves"};
  app.require_subcommand(1);

  std::string path;

  auto* validate = app.add_subcommand("validate", "Check a dataset file and report every violation");
  validate->add_option("file", path, "dataset file")->required();

  double table_alpha = 0.5;
  std::string table_format = "text";
  bool show_errata = false;
  auto* table = app.add_subcommand("table", "Print the alpha-cut, type-reduction and defuzzification table");
  table->add_option("file", path, "dataset file")->required();
  table->add_option("--alpha", table_alpha, "alpha-cut level in [0, 1]")->capture_default_str();
  table->add_option("--format", table_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  table->add_flag("--show-errata", show_errata,
                  "also list the published values that disagree with the computed ones");

  fs::RunConfig config;
  std::string param = "chord-length";
  std::string format = "csv";
  std::string out_dir = ".";
  auto* curves = app.add_subcommand("curves", "Write one SVG per stage plus sampled curve files");
  curves->add_option("file", path, "dataset file")->required();
  curves->add_option("--alpha", config.alpha, "alpha-cut level in [0, 1]")->capture_default_str();
  curves->add_option("--degree", config.degree, "B-spline degree in [1, 5]")->capture_default_str();
  curves->add_option("--parametrization", param, "uniform, chord-length or centripetal")
      ->capture_default_str();
  curves->add_option("--samples", config.samples, "samples per curve (>= 2)")->capture_default_str();
  curves->add_option("--out", out_dir, "output directory")->capture_default_str();
  curves->add_option("--format", format, "sample file format: csv, json, or svg for SVG only")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? fs::kExitOk : fs::kExitUsage;
  }

  try {
    if (*validate) {
      const auto outcome = fs::cmd_validate(path);
      (outcome.status == fs::kExitOk ? std::cout : std::cerr) << outcome.text << '\n';
      return outcome.status;
    }
    if (*table) {
      const auto d = fs::load_dataset(path);
      std::cout << fs::cmd_table(d, table_alpha,
                                 table_format == "csv" ? fs::TableFormat::csv : fs::TableFormat::text,
                                 show_errata);
      return fs::kExitOk;
    }
    if (*curves) {
      config.parametrization = fs::parse_param_choice(param);
      config.format = fs::parse_output_format(format);
      config.validate();
      const auto d = fs::load_dataset(path);
      for (const auto& p : fs::cmd_curves(d, config, out_dir)) std::cout << p.string() << '\n';
      return fs::kExitOk;
    }
  } catch (const fs::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return fs::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fs::kExitUsage;
  }
  return fs::kExitUsage;
}
