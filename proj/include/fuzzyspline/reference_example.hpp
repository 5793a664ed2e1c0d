#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fuzzyspline/fuzzy_core.hpp"

namespace fuzzyspline {

/// The four-point worked example (crisp points (-5,0), (15,20), (10,-20),
/// (40,10)) that the bundled `table51.json` fixture holds.
Dataset reference_dataset();

/// Cut level the worked example is tabulated at.
inline constexpr double kReferenceAlpha = 0.5;

/// A value whose published print disagrees with the computed one.
struct Erratum {
  std::size_t index;
  std::string column;
  CrispPoint printed;
  CrispPoint computed;
  std::string justification;
};

/// The two misprinted right type-reduction entries of the published table.
std::vector<Erratum> reference_errata();

}  // namespace fuzzyspline
