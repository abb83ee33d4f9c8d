// Minimal SVG polyline writer for the CLI plots.
//
// Output is a single layer of <polyline> elements in data coordinates with
// the y axis flipped (SVG y grows downward), inside a viewBox spanning the
// joint data extents plus a 5% margin. Elements are emitted in input order,
// so the document structure is deterministic even though the files are not
// byte-exactness targets.

#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "slope_nav/vec.hpp"

namespace slope_nav::svg {

struct Polyline {
    std::vector<Vec2> points;
    std::string stroke = "black";
    double widthScale = 1.0;  // multiplier on the common stroke width
};

namespace detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace detail

// `background`: fill color of a full-viewBox backdrop rectangle, or "" for
// none (used to put the white Riemannian front on gray).
inline void write(std::ostream& os, const std::vector<Polyline>& lines,
                  const std::string& background = "") {
    double xMin = 0.0, xMax = 1.0, yMin = 0.0, yMax = 1.0;
    bool first = true;
    for (const Polyline& line : lines) {
        for (const Vec2& p : line.points) {
            if (first) {
                xMin = xMax = p.x1;
                yMin = yMax = p.x2;
                first = false;
            } else {
                xMin = std::min(xMin, p.x1);
                xMax = std::max(xMax, p.x1);
                yMin = std::min(yMin, p.x2);
                yMax = std::max(yMax, p.x2);
            }
        }
    }
    double spanX = xMax - xMin, spanY = yMax - yMin;
    const double span = std::max({spanX, spanY, 1e-9});
    const double margin = 0.05 * span;
    const double width = spanX + 2.0 * margin;
    const double height = spanY + 2.0 * margin;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << detail::num(xMin - margin) << " " << detail::num(-yMax - margin)
       << " " << detail::num(width) << " " << detail::num(height) << "\">\n";
    if (!background.empty()) {
        os << "  <rect x=\"" << detail::num(xMin - margin) << "\" y=\""
           << detail::num(-yMax - margin) << "\" width=\""
           << detail::num(width) << "\" height=\"" << detail::num(height)
           << "\" fill=\"" << background << "\"/>\n";
    }
    const double strokeWidth = 0.004 * span;
    for (const Polyline& line : lines) {
        os << "  <polyline fill=\"none\" stroke=\"" << line.stroke
           << "\" stroke-width=\""
           << detail::num(strokeWidth * line.widthScale) << "\" points=\"";
        bool sep = false;
        for (const Vec2& p : line.points) {
            if (sep) os << " ";
            os << detail::num(p.x1) << "," << detail::num(-p.x2);
            sep = true;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace slope_nav::svg
