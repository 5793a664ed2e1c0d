#include "fuzzyspline/commands.hpp"

#include <cmath>
#include <system_error>

#include "fuzzyspline/curve_pipeline.hpp"
#include "fuzzyspline/dataset_io.hpp"
#include "fuzzyspline/errors.hpp"

namespace fuzzyspline {

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::svg:
      return "svg";
    case OutputFormat::json:
      return "json";
  }
  return "unknown";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "svg") return OutputFormat::svg;
  if (text == "json") return OutputFormat::json;
  throw DomainError("unknown output format '" + std::string(text) + "' (expected csv, svg or json)");
}

void RunConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw DomainError("degree must lie in [" + std::to_string(kMinDegree) + ", " +
                      std::to_string(kMaxDegree) + "], got " + std::to_string(degree));
  }
  if (samples < 2) throw DomainError("samples must be >= 2, got " + std::to_string(samples));
}

std::string cmd_table(const Dataset& d, double alpha, TableFormat format, bool show_errata) {
  require_valid(d);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  return stage_table(d, alpha, format, show_errata);
}

std::vector<std::filesystem::path> cmd_curves(const Dataset& d, const RunConfig& config,
                                              const std::filesystem::path& out_dir) {
  config.validate();
  const StageBundles bundles =
      run_curve_pipeline(d, config.alpha, config.degree, config.parametrization);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  const std::string label = d.label.empty() ? std::string("dataset") : d.label;
  const char letters[] = {'a', 'b', 'c', 'd'};
  std::vector<std::filesystem::path> written;
  const auto all = bundles.all();
  for (std::size_t k = 0; k < all.size(); ++k) {
    const FuzzyCurveBundle& b = *all[k];
    std::string stem = std::string("stage_") + letters[k] + "_" + std::string(to_string(b.stage()));
    for (char& c : stem) {
      if (c == '-') c = '_';
    }

    const auto svg_path = out_dir / (stem + ".svg");
    write_text_file(svg_path, render_svg(b, config.samples,
                                         label + ": " + std::string(to_string(b.stage()))));
    written.push_back(svg_path);

    if (config.format == OutputFormat::csv) {
      const auto path = out_dir / (stem + ".csv");
      write_text_file(path, samples_csv(b, config.samples));
      written.push_back(path);
    } else if (config.format == OutputFormat::json) {
      const auto path = out_dir / (stem + ".json");
      write_text_file(path, samples_json(b, config.samples));
      written.push_back(path);
    }
  }
  return written;
}

ValidateOutcome cmd_validate(const std::filesystem::path& path) {
  Dataset d;
  try {
    d = parse_dataset(read_text_file(path), path.stem().string());
  } catch (const ParseError& e) {
    return {std::string("error: ") + e.what(), kExitUsage};
  }
  const ValidationReport report = validate_dataset(d);
  return {report.to_string(), report.ok() ? kExitOk : kExitValidation};
}

}  // namespace fuzzyspline
