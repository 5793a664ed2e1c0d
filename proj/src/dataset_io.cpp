#include "fuzzyspline/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "fuzzyspline/errors.hpp"

namespace fuzzyspline {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte count read so far.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

CrispPoint parse_pair(const ordered_json& value, std::size_t index, std::string_view key) {
  const auto where = "point " + std::to_string(index) + ", key '" + std::string(key) + "'";
  if (!value.is_array() || value.size() != 2) {
    throw ParseError(where + ": expected a 2-element array of numbers");
  }
  if (!value[0].is_number() || !value[1].is_number()) {
    throw ParseError(where + ": coordinates must be numbers");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

}  // namespace

Dataset parse_dataset(std::string_view text, std::string label) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }

  if (!doc.is_array()) throw ParseError("top-level value must be a list of points");

  Dataset d;
  d.label = std::move(label);
  d.points.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& obj = doc[i];
    if (!obj.is_object()) throw ParseError("point " + std::to_string(i) + " is not an object");
    for (const auto& item : obj.items()) {
      if (std::find(kLateralNames.begin(), kLateralNames.end(), item.key()) ==
          kLateralNames.end()) {
        throw ParseError("point " + std::to_string(i) + ": unknown key '" + item.key() + "'");
      }
    }
    FuzzyDataPoint p;
    for (std::size_t k = 0; k < kLateralCount; ++k) {
      const std::string key(kLateralNames[k]);
      const auto it = obj.find(key);
      if (it == obj.end()) {
        throw MissingKeyError(key, "point " + std::to_string(i) + ": missing key '" + key + "'");
      }
      p[static_cast<Lateral>(k)] = parse_pair(*it, i, key);
    }
    d.points.push_back(p);
  }
  return d;
}

Dataset load_dataset(const std::filesystem::path& path) {
  Dataset d = parse_dataset(read_text_file(path), path.stem().string());
  require_valid(d);
  return d;
}

std::string to_json_text(const Dataset& d) {
  ordered_json doc = ordered_json::array();
  for (const auto& p : d.points) {
    ordered_json obj = ordered_json::object();
    for (std::size_t k = 0; k < kLateralCount; ++k) {
      const CrispPoint& q = p[static_cast<Lateral>(k)];
      obj[std::string(kLateralNames[k])] = ordered_json::array({q.x, q.y});
    }
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

void save_dataset(const Dataset& d, const std::filesystem::path& path) {
  write_text_file(path, to_json_text(d));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace fuzzyspline
