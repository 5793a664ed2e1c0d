#include "fuzzyspline/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "fuzzyspline/fuzzy_ops.hpp"
#include "fuzzyspline/reference_example.hpp"

namespace fuzzyspline {

std::string format_fixed4(double v) {
  double r = std::round(v * 1e4) / 1e4;
  if (r == 0.0) r = 0.0;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.4f", r);
  return buf.data();
}

std::string format_point4(const CrispPoint& p) {
  return "(" + format_fixed4(p.x) + ", " + format_fixed4(p.y) + ")";
}

std::string format_exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

namespace {

struct Block {
  std::string title;
  std::string stage;
  std::vector<std::string> columns;
  std::vector<std::vector<CrispPoint>> rows;
};

std::vector<Block> build_blocks(const Dataset& d, double alpha) {
  const std::vector<std::string> lateral(kLateralNames.begin(), kLateralNames.end());
  const std::string level = "alpha = " + format_fixed4(alpha);
  Block fuzzy{"Fuzzy data points", "fuzzy", lateral, {}};
  Block cut{"Alpha-cut, " + level, "alpha-cut", lateral, {}};
  Block reduced{"Type reduction, " + level, "reduced", {"left", "crisp", "right"}, {}};
  Block defuzz{"Defuzzification, " + level, "defuzzified", {"crisp", "defuzzified"}, {}};

  for (const auto& p : d.points) {
    const StageRecord rec = run_point_pipeline(p, alpha);
    const auto in = p.lateral();
    const auto out = rec.alpha_cut.point.lateral();
    fuzzy.rows.emplace_back(in.begin(), in.end());
    cut.rows.emplace_back(out.begin(), out.end());
    reduced.rows.push_back({rec.reduced.left, rec.reduced.crisp, rec.reduced.right});
    defuzz.rows.push_back({p.crisp, rec.defuzzified});
  }
  return {fuzzy, cut, reduced, defuzz};
}

void write_text_block(std::ostringstream& out, const Block& b) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"i"};
  header.insert(header.end(), b.columns.begin(), b.columns.end());
  cells.push_back(header);
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (const auto& p : b.rows[i]) row.push_back(format_point4(p));
    cells.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }

  out << b.title << '\n';
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
}

bool is_reference_run(const Dataset& d, double alpha) {
  return alpha == kReferenceAlpha && d.points == reference_dataset().points;
}

void write_errata(std::ostringstream& out, const Dataset& d, double alpha) {
  out << "\nErrata (published value vs computed)\n";
  if (!is_reference_run(d, alpha)) {
    out << "no known errata for this dataset and alpha\n";
    return;
  }
  for (const auto& e : reference_errata()) {
    out << "i = " << e.index << ", " << e.column << ": printed " << format_point4(e.printed)
        << ", computed " << format_point4(e.computed) << "; " << e.justification << '\n';
  }
}

}  // namespace

std::string stage_table(const Dataset& d, double alpha, TableFormat format, bool show_errata) {
  const auto blocks = build_blocks(d, alpha);
  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "stage,i,column,x,y\n";
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows.size(); ++i) {
        for (std::size_t c = 0; c < b.columns.size(); ++c) {
          out << b.stage << ',' << i << ',' << b.columns[c] << ',' << format_fixed4(b.rows[i][c].x)
              << ',' << format_fixed4(b.rows[i][c].y) << '\n';
        }
      }
    }
    if (show_errata && is_reference_run(d, alpha)) {
      for (const auto& e : reference_errata()) {
        out << "printed," << e.index << ',' << e.column << ',' << format_fixed4(e.printed.x) << ','
            << format_fixed4(e.printed.y) << '\n';
      }
    }
    return out.str();
  }

  bool first = true;
  for (const auto& b : blocks) {
    if (!first) out << '\n';
    first = false;
    write_text_block(out, b);
  }
  if (show_errata) write_errata(out, d, alpha);
  return out.str();
}

namespace {

constexpr std::string_view channel_color(std::string_view name) {
  if (name == "ll" || name == "rr") return "#9ecae1";
  if (name == "l" || name == "r") return "#4292c6";
  if (name == "rl" || name == "lr") return "#08519c";
  if (name == "left" || name == "right") return "#2ca25f";
  if (name == "defuzzified") return "#e6550d";
  return "#000000";
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const CrispPoint& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
};

}  // namespace

std::string render_svg(const FuzzyCurveBundle& b, std::size_t samples, const std::string& title) {
  std::vector<std::vector<CrispPoint>> polylines;
  Box box;
  for (const auto& ch : b.channels()) {
    polylines.push_back(sample_curve(ch.curve, samples));
    for (const auto& p : polylines.back()) box.add(p);
  }

  double w = box.max_x - box.min_x;
  double h = box.max_y - box.min_y;
  // A flat box still needs a visible extent in both directions.
  const double fallback = std::max({w, h, 1.0});
  if (w == 0.0) w = fallback;
  if (h == 0.0) h = fallback;
  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  const double cx = 0.5 * (box.min_x + box.max_x);
  const double cy = 0.5 * (box.min_y + box.max_y);
  const double view_w = w + 2 * mx;
  const double view_h = h + 2 * my;
  const double view_x = cx - 0.5 * view_w;
  const double view_y = -(cy + 0.5 * view_h);
  const double marker = 0.006 * std::max(view_w, view_h);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
      << "preserveAspectRatio=\"xMidYMid meet\" viewBox=\"" << format_exact(view_x) << ' '
      << format_exact(view_y) << ' ' << format_exact(view_w) << ' ' << format_exact(view_h)
      << "\">\n"
      << "  <title>" << xml_escape(title) << "</title>\n"
      << "  <g transform=\"scale(1,-1)\">\n";
  for (std::size_t c = 0; c < polylines.size(); ++c) {
    const auto& name = b.channels()[c].name;
    out << "    <polyline data-channel=\"" << name << "\" fill=\"none\" stroke=\""
        << channel_color(name) << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" "
        << "points=\"";
    bool first = true;
    for (const auto& p : polylines[c]) {
      if (!first) out << ' ';
      first = false;
      out << format_exact(p.x) << ',' << format_exact(p.y);
    }
    out << "\"/>\n";
  }
  for (const auto& ch : b.channels()) {
    for (const auto& p : ch.data) {
      out << "    <circle data-channel=\"" << ch.name << "\" cx=\"" << format_exact(p.x)
          << "\" cy=\"" << format_exact(p.y) << "\" r=\"" << format_exact(marker) << "\" fill=\""
          << channel_color(ch.name) << "\"/>\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string samples_csv(const FuzzyCurveBundle& b, std::size_t samples) {
  std::ostringstream out;
  out << "t,channel,x,y\n";
  for (const auto& ch : b.channels()) {
    const auto ts = sample_parameters(ch.curve, samples);
    for (double t : ts) {
      const CrispPoint p = eval_curve(ch.curve, t);
      out << format_exact(t) << ',' << ch.name << ',' << format_exact(p.x) << ','
          << format_exact(p.y) << '\n';
    }
  }
  return out.str();
}

std::string samples_json(const FuzzyCurveBundle& b, std::size_t samples) {
  nlohmann::ordered_json doc;
  doc["stage"] = std::string(to_string(b.stage()));
  doc["alpha"] = b.alpha() ? nlohmann::ordered_json(*b.alpha()) : nlohmann::ordered_json(nullptr);
  doc["degree"] = b.degree();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& ch : b.channels()) {
    for (double t : sample_parameters(ch.curve, samples)) {
      const CrispPoint p = eval_curve(ch.curve, t);
      rows.push_back({{"t", t}, {"channel", ch.name}, {"x", p.x}, {"y", p.y}});
    }
  }
  doc["samples"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace fuzzyspline
