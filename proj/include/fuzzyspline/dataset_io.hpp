#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzyspline/fuzzy_core.hpp"

namespace fuzzyspline {

/// Parses the dataset text format without structural validation.
///
/// The document is a top-level array; every element is an object with
/// exactly the keys ll, l, rl, crisp, lr, r, rr, each mapped to a
/// two-element array of numbers. Throws ParseError (with line/column when
/// the text is not well formed) or MissingKeyError.
Dataset parse_dataset(std::string_view text, std::string label = {});

/// Reads and parses `path`, then validates. The label is the file stem.
/// Throws ParseError, MissingKeyError or ValidationError.
Dataset load_dataset(const std::filesystem::path& path);

/// Serializes in the same format; parse_dataset(to_json_text(d)) == d.
std::string to_json_text(const Dataset& d);

/// Throws Error if the file cannot be written.
void save_dataset(const Dataset& d, const std::filesystem::path& path);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes a whole file; throws Error if it cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fuzzyspline
