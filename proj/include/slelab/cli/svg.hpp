#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slelab/loewner/trace.hpp"

namespace slelab::cli {

/// Unset fields take the defaults below. Widths are in pixels (non-scaling strokes).
struct TraceStyle {
  std::optional<int> width_px;
  std::optional<int> height_px;
  std::optional<std::string> trace_colour;
  std::optional<double> trace_width;
  std::optional<std::string> boundary_colour;
  std::optional<double> boundary_width;
  std::optional<std::string> marker_colour;
  std::optional<double> marker_radius;  // fraction of the view span
  std::optional<double> margin;         // fraction of the view span
};

struct ResolvedStyle {
  int width_px = 800;
  int height_px = 600;
  std::string trace_colour = "#1f4e9c";
  double trace_width = 1.5;
  std::string boundary_colour = "#444444";
  double boundary_width = 1.0;
  std::string marker_colour = "#c0392b";
  double marker_radius = 0.008;
  double margin = 0.06;
};

inline ResolvedStyle resolve(const TraceStyle& s) {
  ResolvedStyle r;
  r.width_px = s.width_px.value_or(r.width_px);
  r.height_px = s.height_px.value_or(r.height_px);
  r.trace_colour = s.trace_colour.value_or(r.trace_colour);
  r.trace_width = s.trace_width.value_or(r.trace_width);
  r.boundary_colour = s.boundary_colour.value_or(r.boundary_colour);
  r.boundary_width = s.boundary_width.value_or(r.boundary_width);
  r.marker_colour = s.marker_colour.value_or(r.marker_colour);
  r.marker_radius = s.marker_radius.value_or(r.marker_radius);
  r.margin = s.margin.value_or(r.margin);
  return r;
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Marker {
  cplx z;
  std::string label;
};

}  // namespace detail

/// Standalone SVG of a trace in its domain. The drawing uses mathematical coordinates:
/// the viewBox is in the complex plane and a scale(1,-1) group puts Im z upwards, so
/// polyline coordinates are the trace points themselves.
inline std::string render_trace_svg(const loewner::Trace& tr, const TraceStyle& style = {}) {
  if (tr.points.empty()) throw DomainError("render_trace_svg: empty trace");
  const ResolvedStyle st = resolve(style);
  using loewner::GeometryKind;
  const GeometryKind kind = tr.geometry.kind;
  const bool disk = kind == GeometryKind::Radial || kind == GeometryKind::Annular;

  std::vector<detail::Marker> marks;
  if (disk) {
    marks = {{0.0, "0"}, {1.0, "1"}};
  } else {
    marks = {{0.0, "0"}, {1.0, "1"}, {-1.0, "-1"}, {cplx(0, 1), "i"}};
  }

  double x0 = -1.2, x1 = 1.2, y0 = disk ? -1.2 : 0.0, y1 = disk ? 1.2 : 1.2;
  for (const cplx& z : tr.points) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }
  const double span = std::max(x1 - x0, y1 - y0);
  const double pad = st.margin * span;
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  // keep the pixel aspect ratio equal to the view aspect ratio
  const double aspect = static_cast<double>(st.width_px) / st.height_px;
  if ((x1 - x0) / (y1 - y0) < aspect) {
    const double grow = aspect * (y1 - y0) - (x1 - x0);
    x0 -= 0.5 * grow;
    x1 += 0.5 * grow;
  } else {
    const double grow = (x1 - x0) / aspect - (y1 - y0);
    y1 += grow;  // extra room goes above the boundary
  }

  using detail::num;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << st.width_px << "\" height=\"" << st.height_px
     << "\" viewBox=\"" << num(x0) << " " << num(-y1) << " " << num(x1 - x0) << " " << num(y1 - y0) << "\">\n";
  os << "<title>" << loewner::to_string(kind) << " trace, " << tr.points.size() << " points, t in ["
     << num(tr.times.front()) << ", " << num(tr.times.back()) << "]</title>\n";
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(-y1) << "\" width=\"" << num(x1 - x0) << "\" height=\""
     << num(y1 - y0) << "\" fill=\"white\"/>\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\">\n";

  const std::string bstroke = "stroke=\"" + st.boundary_colour + "\" stroke-width=\"" + num(st.boundary_width) +
                              "\" vector-effect=\"non-scaling-stroke\"";
  switch (kind) {
    case GeometryKind::Chordal:
      os << "<line id=\"boundary\" x1=\"" << num(x0) << "\" y1=\"0\" x2=\"" << num(x1) << "\" y2=\"0\" " << bstroke
         << "/>\n";
      break;
    case GeometryKind::Dipolar:
      // (-1, 1) is the free arc; the rest of the axis is the target set, drawn heavier
      os << "<line id=\"boundary\" x1=\"-1\" y1=\"0\" x2=\"1\" y2=\"0\" " << bstroke << "/>\n";
      os << "<g id=\"target\" stroke=\"" << st.boundary_colour << "\" stroke-width=\"" << num(3 * st.boundary_width)
         << "\">\n";
      os << "<line x1=\"" << num(x0) << "\" y1=\"0\" x2=\"-1\" y2=\"0\" vector-effect=\"non-scaling-stroke\"/>\n";
      os << "<line x1=\"1\" y1=\"0\" x2=\"" << num(x1) << "\" y2=\"0\" vector-effect=\"non-scaling-stroke\"/>\n";
      os << "</g>\n";
      break;
    case GeometryKind::Radial:
      os << "<circle id=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" " << bstroke << "/>\n";
      break;
    case GeometryKind::Annular:
      os << "<circle id=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" " << bstroke << "/>\n";
      os << "<circle id=\"inner-boundary\" cx=\"0\" cy=\"0\" r=\"" << num(std::exp(-tr.geometry.p)) << "\" "
         << bstroke << "/>\n";
      break;
  }

  os << "<polyline id=\"trace\" stroke=\"" << st.trace_colour << "\" stroke-width=\"" << num(st.trace_width)
     << "\" stroke-linejoin=\"round\" vector-effect=\"non-scaling-stroke\" points=\"";
  bool first = true;
  for (const cplx& z : tr.points) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    os << (first ? "" : " ") << num(z.real()) << "," << num(z.imag());
    first = false;
  }
  os << "\"/>\n</g>\n";

  const double r = st.marker_radius * span;
  os << "<g id=\"markers\" fill=\"" << st.marker_colour << "\" font-family=\"sans-serif\" font-size=\""
     << num(4 * r) << "\">\n";
  for (const auto& m : marks) {
    os << "<circle cx=\"" << num(m.z.real()) << "\" cy=\"" << num(-m.z.imag()) << "\" r=\"" << num(r) << "\"/>\n";
    os << "<text x=\"" << num(m.z.real() + 1.5 * r) << "\" y=\"" << num(-m.z.imag() + 4.5 * r) << "\">" << m.label
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace slelab::cli
