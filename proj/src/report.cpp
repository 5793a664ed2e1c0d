#include "fuzzyspline/validation.hpp"

#include <sstream>

namespace fuzzyspline {

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << '\n';
    first = false;
    if (v.point_index) out << "point " << *v.point_index << ": ";
    out << v.message;
  }
  return out.str();
}

}  // namespace fuzzyspline
