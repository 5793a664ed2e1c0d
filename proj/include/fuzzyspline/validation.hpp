#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fuzzyspline {

struct Violation {
  /// Position of the offending point inside a dataset, if any.
  std::optional<std::size_t> point_index;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Result of a structural check. Empty means the input is valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void add(std::string message, std::optional<std::size_t> point_index = std::nullopt) {
    violations.push_back({point_index, std::move(message)});
  }

  /// "ok" or one violation per line, prefixed with "point i: " when indexed.
  std::string to_string() const;
};

}  // namespace fuzzyspline
