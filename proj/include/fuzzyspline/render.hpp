#pragma once

#include <cstddef>
#include <string>

#include "fuzzyspline/curve_pipeline.hpp"
#include "fuzzyspline/fuzzy_core.hpp"

namespace fuzzyspline {

/// Rounds half away from zero to 4 decimals and prints with exactly 4
/// decimals; negative zero prints as 0.0000.
std::string format_fixed4(double v);

/// "(x, y)" with both coordinates through format_fixed4.
std::string format_point4(const CrispPoint& p);

/// Shortest text that parses back to the same double.
std::string format_exact(double v);

enum class TableFormat { text, csv };

/// Four stage blocks (fuzzy points, alpha-cut, type reduction,
/// defuzzification) with columns in the published order. CSV uses the long
/// form `stage,i,column,x,y`. With `show_errata`, the known misprints of
/// the reference example are listed after the table when `d` is that
/// example at the reference alpha.
std::string stage_table(const Dataset& d, double alpha, TableFormat format,
                        bool show_errata = false);

/// SVG 1.1 document: one polyline per channel sampled at `samples`
/// parameters, plus a marker per channel datum. Coordinates are written in
/// data units; the y axis is flipped by a group transform.
std::string render_svg(const FuzzyCurveBundle& b, std::size_t samples, const std::string& title);

/// `t,channel,x,y` header plus samples x channel-count rows.
std::string samples_csv(const FuzzyCurveBundle& b, std::size_t samples);

/// The same rows as samples_csv, as a JSON document.
std::string samples_json(const FuzzyCurveBundle& b, std::size_t samples);

}  // namespace fuzzyspline
