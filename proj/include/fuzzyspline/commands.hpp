#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyspline/bspline.hpp"
#include "fuzzyspline/fuzzy_core.hpp"
#include "fuzzyspline/render.hpp"

namespace fuzzyspline {

enum class OutputFormat { csv, svg, json };

std::string_view to_string(OutputFormat f) noexcept;
OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
  double alpha = 0.5;
  int degree = 3;
  ParamChoice parametrization = ParamChoice::chord_length;
  std::size_t samples = 200;
  OutputFormat format = OutputFormat::csv;

  /// Throws DomainError naming the first field out of range.
  void validate() const;
};

/// Process exit statuses of the command line tool.
enum ExitStatus : int { kExitOk = 0, kExitValidation = 1, kExitUsage = 2 };

std::string cmd_table(const Dataset& d, double alpha, TableFormat format = TableFormat::text,
                      bool show_errata = false);

/// Writes stage_{a,b,c,d}_<stage>.svg into `out_dir` (created if missing)
/// and, for csv/json formats, one sample file per stage next to them.
/// Returns the written paths in order. Throws Error if a file cannot be written.
std::vector<std::filesystem::path> cmd_curves(const Dataset& d, const RunConfig& config,
                                              const std::filesystem::path& out_dir);

struct ValidateOutcome {
  std::string text;
  int status = kExitOk;
};

/// Never throws for bad input: parse failures map to kExitUsage and
/// validation failures to kExitValidation.
ValidateOutcome cmd_validate(const std::filesystem::path& path);

}  // namespace fuzzyspline
