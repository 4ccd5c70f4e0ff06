#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/geometry.hpp"
#include "folium/laws.hpp"
#include "folium/parametrize.hpp"

namespace folium {

// SVG rendering of the real affine curve. All curve points are evaluated
// exactly and converted to double only when written out.

struct PlotSample {
  mpq_class t;
  double x;
  double y;
};

struct PlotOptions {
  mpq_class a{1};
  mpq_class t_min{-9, 10};
  mpq_class t_max{4};
  std::size_t samples = 400;
  /// Samples with |t + 1| below this are dropped (the asymptote direction).
  mpq_class gap{1, 1000};
  std::vector<mpq_class> points;
  std::vector<std::pair<mpq_class, mpq_class>> chords;
  bool bisector = false;
  bool asymptote = false;
  int width = 800;
  int height = 800;
};

/// Evenly spaced exact parameters, split into runs at the excluded window
/// around t = -1.
inline std::vector<std::vector<PlotSample>> sample_curve(const Folium& curve, const mpq_class& t_min,
                                                         const mpq_class& t_max, std::size_t samples,
                                                         const mpq_class& gap) {
  if (!curve.field().is_rational()) throw Error(ErrorCode::UnorderedField, "plots need a rational curve");
  if (samples < 2) throw Error(ErrorCode::DegenerateRange, "need at least two samples");
  if (t_min >= t_max) throw Error(ErrorCode::DegenerateRange, "t-range is empty");
  std::vector<std::vector<PlotSample>> runs(1);
  const mpq_class step = (t_max - t_min) / static_cast<long>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    mpq_class t = t_min + step * static_cast<long>(i);
    if (abs(mpq_class(t + 1)) < gap) {
      if (!runs.back().empty()) runs.emplace_back();
      continue;
    }
    const auto p = p_affine(curve, Element(curve.field(), t));
    runs.back().push_back({t, p.x().to_double(), p.y().to_double()});
  }
  if (runs.back().empty()) runs.pop_back();
  if (runs.empty()) throw Error(ErrorCode::DegenerateRange, "every sample falls in the excluded window");
  return runs;
}

namespace detail {

inline std::string num(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct ViewBox {
  double xmin, xmax, ymin, ymax;
};

inline std::string svg_line(const ViewBox& box, double m, double n, double p, const std::string& style) {
  // m x + n y + p = 0 across the whole box.
  double x1, y1, x2, y2;
  if (std::abs(n) >= std::abs(m)) {
    x1 = box.xmin;
    x2 = box.xmax;
    y1 = -(m * x1 + p) / n;
    y2 = -(m * x2 + p) / n;
  } else {
    y1 = box.ymin;
    y2 = box.ymax;
    x1 = -(n * y1 + p) / m;
    x2 = -(n * y2 + p) / m;
  }
  return "  <line x1=\"" + num(x1) + "\" y1=\"" + num(-y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(-y2) + "\" " +
         style + "/>\n";
}

inline std::string svg_marker(const ProjectivePoint& p, const std::string& label, const std::string& color,
                              double radius) {
  const double x = p.x().to_double();
  const double y = p.y().to_double();
  return "  <circle cx=\"" + num(x) + "\" cy=\"" + num(-y) + "\" r=\"" + num(radius) + "\" fill=\"" + color +
         "\"/>\n  <text x=\"" + num(x + 1.5 * radius) + "\" y=\"" + num(-y - 1.5 * radius) + "\" font-size=\"" +
         num(4 * radius) + "\" fill=\"" + color + "\">" + label + "</text>\n";
}

}  // namespace detail

/// Deterministic SVG document for the given options.
inline std::string render_svg(const PlotOptions& opt) {
  const Field q = Field::rationals();
  const Folium curve(Element(q, opt.a));
  const auto runs = sample_curve(curve, opt.t_min, opt.t_max, opt.samples, opt.gap);

  detail::ViewBox box{0, 0, 0, 0};
  bool first = true;
  for (const auto& run : runs) {
    for (const auto& s : run) {
      if (first) {
        box = {s.x, s.x, s.y, s.y};
        first = false;
      }
      box.xmin = std::min(box.xmin, s.x);
      box.xmax = std::max(box.xmax, s.x);
      box.ymin = std::min(box.ymin, s.y);
      box.ymax = std::max(box.ymax, s.y);
    }
  }
  const double limit = 10.0 * std::abs(opt.a.get_d());
  box.xmin = std::max(box.xmin, -limit);
  box.ymin = std::max(box.ymin, -limit);
  box.xmax = std::min(box.xmax, limit);
  box.ymax = std::min(box.ymax, limit);
  const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-6});
  const double margin = 0.08 * span;
  box = {box.xmin - margin, box.xmax + margin, box.ymin - margin, box.ymax + margin};
  const double stroke = span / 400.0;
  const double radius = span / 120.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width) + "\" height=\"" +
         std::to_string(opt.height) + "\" viewBox=\"" + detail::num(box.xmin) + " " + detail::num(-box.ymax) + " " +
         detail::num(box.xmax - box.xmin) + " " + detail::num(box.ymax - box.ymin) +
         "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  svg += "  <title>x^3 + y^3 = 3*(" + opt.a.get_str() + ")*x*y</title>\n";
  const std::string axis = "stroke=\"#bbbbbb\" stroke-width=\"" + detail::num(stroke / 2) + "\"";
  svg += detail::svg_line(box, 0, 1, 0, axis);
  svg += detail::svg_line(box, 1, 0, 0, axis);
  if (opt.bisector) {
    svg += detail::svg_line(box, 1, -1, 0, "stroke=\"#2a9d8f\" stroke-width=\"" + detail::num(stroke) + "\"");
  }
  if (opt.asymptote) {
    svg += detail::svg_line(box, 1, 1, opt.a.get_d(),
                            "stroke=\"#888888\" stroke-dasharray=\"" + detail::num(4 * stroke) + "\" stroke-width=\"" +
                                detail::num(stroke) + "\"");
  }
  for (const auto& run : runs) {
    svg += "  <polyline fill=\"none\" stroke=\"#1d3557\" stroke-width=\"" + detail::num(stroke) + "\" points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) {
      svg += (i ? " " : "") + detail::num(run[i].x) + "," + detail::num(-run[i].y);
    }
    svg += "\"/>\n";
  }
  for (const auto& [t1, t2] : opt.chords) {
    const auto p1 = pbar(curve, Element(q, t1));
    const auto p2 = pbar(curve, Element(q, t2));
    if (p1 == curve.origin() || p2 == curve.origin()) {
      throw Error(ErrorCode::OriginNotAllowed, "chord overlays need parameters other than 0");
    }
    const auto line = chord_or_tangent(curve, p1, p2);
    svg += detail::svg_line(box, line.m().to_double(), line.n().to_double(), line.p().to_double(),
                            "stroke=\"#e76f51\" stroke-width=\"" + detail::num(stroke) + "\"");
    const auto p3 = third_intersection(curve, p1, p2);
    for (const auto& [pt, label] : {std::pair{p1, "t=" + t1.get_str()}, std::pair{p2, "t=" + t2.get_str()},
                                    std::pair{p3, "t=" + pbar_inv(curve, p3).to_string()}}) {
      if (pt.is_affine()) svg += detail::svg_marker(pt, label, "#e76f51", radius);
    }
  }
  for (const auto& t : opt.points) {
    const auto p = pbar(curve, Element(q, t));
    if (p.is_affine()) svg += detail::svg_marker(p, "t=" + t.get_str(), "#264653", radius);
  }
  svg += "</svg>\n";
  return svg;
}

/// Accepts `n`, `n/d` or a decimal such as `-0.9`, exactly.
inline mpq_class parse_rational_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_element(Field::rationals(), text).rational();
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const auto frac_len = text.size() - dot - 1;
  if (frac_len == 0 || text.find('/') != std::string::npos) {
    throw Error(ErrorCode::ParseError, "bad decimal '" + text + "'");
  }
  if (digits == "-" || digits == "+" || digits.empty()) throw Error(ErrorCode::ParseError, "bad decimal '" + text + "'");
  mpq_class value = parse_element(Field::rationals(), digits).rational();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_len);
  value /= scale;
  value.canonicalize();
  return value;
}

}  // namespace folium
