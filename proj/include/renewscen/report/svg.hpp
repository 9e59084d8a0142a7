#pragma once

#include <string>
#include <vector>

namespace renewscen::svg {

enum class Scale { Linear, Log };

struct Axis {
  std::string label;
  Scale scale = Scale::Linear;
  /// Range; computed from the content when min >= max.
  double min = 0.0;
  double max = 0.0;
};

enum class Style { Markers, Line, Dashed };

struct Series {
  std::string label;
  std::string color;
  Style style = Style::Markers;
  std::vector<std::pair<double, double>> points;
  std::string css_class;  ///< "data", "fit", ... Defaults by style.
};

struct HorizontalLine {
  double y;
  std::string label;
};

struct VerticalLine {
  double x;
  std::string label;
};

struct Marker {
  double x;
  double y;
  std::string label;
};

struct Panel {
  std::string title;
  Axis x;
  Axis y;
  std::vector<Series> series;
  std::vector<HorizontalLine> thresholds;
  std::vector<VerticalLine> verticals;
  std::vector<Marker> markers;
};

/// Standalone SVG with the panels side by side. Log axes need positive data;
/// non-positive points are dropped there.
std::string render(const std::string& id, const std::string& title,
                   const std::vector<Panel>& panels);

std::string escape(const std::string& text);

}  // namespace renewscen::svg
