#include "renewscen/report/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace renewscen::svg {

namespace {

constexpr double kPanelWidth = 460.0;
constexpr double kPanelHeight = 340.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 52.0;
constexpr double kLegendHeight = 18.0;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v, Scale s) {
    if (!std::isfinite(v) || (s == Scale::Log && v <= 0)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

std::string_view scale_name(Scale s) { return s == Scale::Log ? "log" : "linear"; }

struct Mapper {
  Axis axis;
  double pixel_lo;
  double pixel_hi;

  double t(double v) const { return axis.scale == Scale::Log ? std::log10(v) : v; }
  double operator()(double v) const {
    double a = t(axis.min), b = t(axis.max);
    return pixel_lo + (t(v) - a) / (b - a) * (pixel_hi - pixel_lo);
  }
  bool valid(double v) const {
    return std::isfinite(v) && (axis.scale == Scale::Linear || v > 0);
  }
};

double nice_step(double span) {
  double raw = span / 5.0;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

Axis finish_axis(Axis axis, Range r) {
  if (axis.min < axis.max) return axis;
  if (!(r.lo <= r.hi)) r = {axis.scale == Scale::Log ? 1.0 : 0.0, 10.0};
  if (axis.scale == Scale::Log) {
    axis.min = std::pow(10.0, std::floor(std::log10(r.lo)));
    axis.max = std::pow(10.0, std::ceil(std::log10(r.hi)));
    if (axis.max <= axis.min) axis.max = axis.min * 10.0;
  } else {
    if (r.hi == r.lo) r.hi = r.lo + 1.0;
    double step = nice_step(r.hi - r.lo);
    axis.min = std::floor(r.lo / step) * step;
    axis.max = std::ceil(r.hi / step) * step;
  }
  return axis;
}

std::vector<double> ticks(const Axis& axis) {
  std::vector<double> out;
  if (axis.scale == Scale::Log) {
    int lo = static_cast<int>(std::ceil(std::log10(axis.min) - 1e-9));
    int hi = static_cast<int>(std::floor(std::log10(axis.max) + 1e-9));
    int stride = std::max(1, (hi - lo) / 8 + 1);
    for (int e = lo; e <= hi; e += stride) out.push_back(std::pow(10.0, e));
  } else {
    double step = nice_step(axis.max - axis.min);
    for (double v = std::ceil(axis.min / step) * step; v <= axis.max + step * 1e-9; v += step)
      out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  }
  return out;
}

std::string tick_label(double v, Scale s) {
  if (s == Scale::Log) {
    int e = static_cast<int>(std::lround(std::log10(v)));
    if (e >= 0 && e <= 5) return fmt::format("{:.0f}", v);
    return fmt::format("1e{}", e);
  }
  if (std::abs(v) >= 1e6) return fmt::format("{:.3g}", v);
  return fmt::format("{:g}", v);
}

std::string px(double v) { return fmt::format("{:.2f}", v); }

std::string default_class(Style s) { return s == Style::Markers ? "data" : "fit"; }

}  // namespace

std::string escape(const std::string& text) {
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

std::string render(const std::string& id, const std::string& title,
                   const std::vector<Panel>& panels) {
  const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(1, panels.size()));
  const double height = kPanelHeight + kLegendHeight * 4 + 30.0;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" id=\"{}\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"11\">\n",
      escape(id), px(width), px(height), px(width), px(height));
  out += fmt::format("<title>{}</title>\n", escape(title));
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += fmt::format("<text x=\"{}\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                     px(width / 2), escape(title));

  for (std::size_t pi = 0; pi < panels.size(); ++pi) {
    const Panel& p = panels[pi];
    Range rx, ry;
    for (const auto& s : p.series)
      for (auto [x, y] : s.points) {
        rx.add(x, p.x.scale);
        ry.add(y, p.y.scale);
      }
    for (const auto& h : p.thresholds) ry.add(h.y, p.y.scale);
    for (const auto& v : p.verticals) rx.add(v.x, p.x.scale);
    for (const auto& m : p.markers) {
      rx.add(m.x, p.x.scale);
      ry.add(m.y, p.y.scale);
    }
    const Axis ax = finish_axis(p.x, rx);
    const Axis ay = finish_axis(p.y, ry);
    const double ox = kPanelWidth * static_cast<double>(pi);
    const double left = ox + kMarginLeft, right = ox + kPanelWidth - kMarginRight;
    const double top = kMarginTop, bottom = kPanelHeight - kMarginBottom;
    const Mapper mx{ax, left, right};
    const Mapper my{ay, bottom, top};
    const std::string clip = fmt::format("{}-clip-{}", id, pi);

    out += fmt::format("<g class=\"panel\" id=\"{}-panel-{}\">\n", escape(id), pi);
    out += fmt::format("<clipPath id=\"{}\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></clipPath>\n",
                       escape(clip), px(left), px(top), px(right - left), px(bottom - top));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
                       px((left + right) / 2), px(top - 10), escape(p.title));
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                       px(left), px(top), px(right - left), px(bottom - top));

    out += fmt::format("<g class=\"axis x-axis\" data-scale=\"{}\" data-min=\"{}\" data-max=\"{}\">\n",
                       scale_name(ax.scale), ax.min, ax.max);
    for (double t : ticks(ax)) {
      double x = mx(t);
      out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ddd\"/>"
                         "<text x=\"{0}\" y=\"{3}\" text-anchor=\"middle\">{4}</text>\n",
                         px(x), px(top), px(bottom), px(bottom + 14), escape(tick_label(t, ax.scale)));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n</g>\n",
                       px((left + right) / 2), px(bottom + 32), escape(ax.label));

    out += fmt::format("<g class=\"axis y-axis\" data-scale=\"{}\" data-min=\"{}\" data-max=\"{}\">\n",
                       scale_name(ay.scale), ay.min, ay.max);
    for (double t : ticks(ay)) {
      double y = my(t);
      out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#ddd\"/>"
                         "<text x=\"{3}\" y=\"{4}\" text-anchor=\"end\">{5}</text>\n",
                         px(left), px(y), px(right), px(left - 4), px(y + 4),
                         escape(tick_label(t, ay.scale)));
    }
    out += fmt::format("<text transform=\"translate({},{}) rotate(-90)\" text-anchor=\"middle\">{}</text>\n</g>\n",
                       px(ox + 14), px((top + bottom) / 2), escape(ay.label));

    out += fmt::format("<g clip-path=\"url(#{})\">\n", escape(clip));
    for (const auto& h : p.thresholds) {
      if (!my.valid(h.y)) continue;
      double y = my(h.y);
      out += fmt::format("<line class=\"threshold\" data-value=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
                         "stroke=\"#555\" stroke-dasharray=\"2 3\"/>\n",
                         h.y, px(left), px(y), px(right), px(y));
      out += fmt::format("<text class=\"threshold-label\" x=\"{}\" y=\"{}\" fill=\"#333\">{}</text>\n",
                         px(left + 4), px(y - 4), escape(h.label));
    }
    for (const auto& v : p.verticals) {
      if (!mx.valid(v.x)) continue;
      double x = mx(v.x);
      out += fmt::format("<line class=\"vertical\" data-value=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
                         "stroke=\"#555\" stroke-dasharray=\"2 3\"/>\n",
                         v.x, px(x), px(top), px(x), px(bottom));
      out += fmt::format("<text class=\"vertical-label\" x=\"{}\" y=\"{}\" fill=\"#333\">{}</text>\n",
                         px(x + 3), px(top + 12), escape(v.label));
    }
    for (const auto& s : p.series) {
      const std::string cls = s.css_class.empty() ? default_class(s.style) : s.css_class;
      if (s.style == Style::Markers) {
        out += fmt::format("<g class=\"{}\" data-label=\"{}\" fill=\"{}\">\n", escape(cls),
                           escape(s.label), escape(s.color));
        for (auto [x, y] : s.points)
          if (mx.valid(x) && my.valid(y))
            out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\"/>\n", px(mx(x)), px(my(y)));
        out += "</g>\n";
      } else {
        std::string pts;
        for (auto [x, y] : s.points)
          if (mx.valid(x) && my.valid(y)) {
            if (!pts.empty()) pts += ' ';
            pts += px(mx(x)) + "," + px(my(y));
          }
        out += fmt::format("<polyline class=\"{}\" data-label=\"{}\" fill=\"none\" stroke=\"{}\" "
                           "stroke-width=\"1.5\"{} points=\"{}\"/>\n",
                           escape(cls), escape(s.label), escape(s.color),
                           s.style == Style::Dashed ? " stroke-dasharray=\"6 4\"" : "", pts);
      }
    }
    for (const auto& m : p.markers) {
      if (!mx.valid(m.x) || !my.valid(m.y)) continue;
      out += fmt::format("<circle class=\"crossing\" data-x=\"{}\" data-y=\"{}\" cx=\"{}\" cy=\"{}\" r=\"5\" "
                         "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
                         m.x, m.y, px(mx(m.x)), px(my(m.y)));
      const bool flip = mx(m.x) > (left + right) / 2;
      out += fmt::format("<text class=\"crossing-label\" x=\"{}\" y=\"{}\"{}>{}</text>\n",
                         px(mx(m.x) + (flip ? -7 : 7)), px(my(m.y) + (flip ? 14 : 4)),
                         flip ? " text-anchor=\"end\"" : "", escape(m.label));
    }
    out += "</g>\n";

    double ly = kPanelHeight;
    for (const auto& s : p.series) {
      out += fmt::format("<g class=\"legend\"><rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"{}\"/>"
                         "<text x=\"{}\" y=\"{}\">{}</text></g>\n",
                         px(left), px(ly), escape(s.color), px(left + 14), px(ly + 9), escape(s.label));
      ly += kLegendHeight * 0.8;
      if (ly > height - 8) break;
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace renewscen::svg
