#pragma once

#include "netpres/diagram_io.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace netpres {

struct RenderOptions {
    int cell_px = 40;      // side of one unit grid cell, > 0
    int margin_cells = 1;  // grid margin around the fundamental domain
    bool grid = true;
    bool labels = false;   // dot names, emitted as XML comments
};

namespace detail {

// Fixed three-decimal rendering of an exact coordinate; ties round away
// from zero. Presentation only, the geometry stays exact up to this point.
inline std::string svg_num(const Rat& value) {
    Rat doubled = value * 2000;
    Int scaled2 = numerator(doubled) / denominator(doubled);
    Int scaled = (scaled2 >= 0 ? scaled2 + 1 : scaled2 - 1) / 2;
    bool negative = scaled < 0;
    Int mag = abs(scaled);
    std::string digits = (mag / 1000).str();
    std::string frac = (mag % 1000).str();
    frac.insert(0, 3 - frac.size(), '0');
    return (negative ? "-" : "") + digits + "." + frac;
}

struct SvgView {
    Int xmin, ymax;
    int cell;

    Rat x(const Rat& wx) const { return (wx - Rat(xmin)) * cell; }
    Rat y(const Rat& wy) const { return (Rat(ymax) - wy) * cell; }  // flip: SVG y grows down
};

inline void svg_line(std::ostream& out, const SvgView& view, const std::string& cls,
                     const RatVec2& a, const RatVec2& b, const std::string& extra = "") {
    out << "  <line class=\"" << cls << "\" x1=\"" << svg_num(view.x(a.x)) << "\" y1=\""
        << svg_num(view.y(a.y)) << "\" x2=\"" << svg_num(view.x(b.x)) << "\" y2=\""
        << svg_num(view.y(b.y)) << "\"" << extra << "/>\n";
}

inline void svg_circle(std::ostream& out, const SvgView& view, const std::string& cls,
                       const RatVec2& center, const Rat& radius, const std::string& extra = "") {
    out << "  <circle class=\"" << cls << "\" cx=\"" << svg_num(view.x(center.x)) << "\" cy=\""
        << svg_num(view.y(center.y)) << "\" r=\"" << svg_num(radius) << "\"" << extra << "/>\n";
}

}  // namespace detail

// Deterministic SVG picture of a diagram: unit grid over the bounding box
// of the fundamental domain plus margin, the domain outline, six dots, the
// circled translation point, and for each push all of its lifts that lie in
// the closed domain, drawn green with an arrowhead at the terminal
// (degenerate lifts become dot-coincident markers). Only line, circle,
// path and marker elements are used.
inline std::string render_svg(const PresentationDiagram& diagram, const RenderOptions& opts = {}) {
    const IntMat2& basis = diagram.basis;
    std::vector<IntVec2> corners = {
        {Int(0), Int(0)}, Int(2) * basis.col1, basis.col2, Int(2) * basis.col1 + basis.col2};

    Int xmin = corners[0].x, xmax = corners[0].x, ymin = corners[0].y, ymax = corners[0].y;
    for (const IntVec2& c : corners) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    xmin -= opts.margin_cells;
    ymin -= opts.margin_cells;
    xmax += opts.margin_cells;
    ymax += opts.margin_cells;

    detail::SvgView view{xmin, ymax, opts.cell_px};
    Int wide = (xmax - xmin) * opts.cell_px;
    Int tall = (ymax - ymin) * opts.cell_px;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << wide
        << "\" height=\"" << tall << "\" viewBox=\"0 0 " << wide << " " << tall << "\">\n";
    out << "  <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n"
           "    <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#1a7a1a\"/>\n"
           "  </marker>\n";

    if (opts.grid) {
        for (Int x = xmin; x <= xmax; ++x)
            detail::svg_line(out, view, "grid", {Rat(x), Rat(ymin)}, {Rat(x), Rat(ymax)},
                             " stroke=\"#cccccc\" stroke-width=\"1\"");
        for (Int y = ymin; y <= ymax; ++y)
            detail::svg_line(out, view, "grid", {Rat(xmin), Rat(y)}, {Rat(xmax), Rat(y)},
                             " stroke=\"#cccccc\" stroke-width=\"1\"");
    }

    out << "  <path class=\"domain\" d=\"M " << detail::svg_num(view.x(Rat(corners[0].x))) << " "
        << detail::svg_num(view.y(Rat(corners[0].y)));
    for (int k : {1, 3, 2}) {
        out << " L " << detail::svg_num(view.x(Rat(corners[k].x))) << " "
            << detail::svg_num(view.y(Rat(corners[k].y)));
    }
    out << " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

    Rat cell(opts.cell_px);
    for (const GreenSegment& seg : diagram.pushes) {
        IntVec2 from = seg.initial.coords(basis);
        std::vector<std::pair<IntVec2, IntVec2>> lifts;
        for (const PlaneIsometry& gamma : neighbor_isometries(basis)) {
            IntVec2 a = gamma(from), b = gamma(seg.terminal);
            if (!in_fundamental_domain(basis, a) || !in_fundamental_domain(basis, b)) continue;
            if (std::find(lifts.begin(), lifts.end(), std::pair(a, b)) == lifts.end())
                lifts.emplace_back(a, b);
        }
        for (const auto& [a, b] : lifts) {
            if (a == b) {
                detail::svg_circle(out, view, "push push-point", to_rat(a), cell / 6,
                                   " fill=\"#1a7a1a\"");
            } else {
                detail::svg_line(out, view, "push", to_rat(a), to_rat(b),
                                 " stroke=\"#1a7a1a\" stroke-width=\"3\" marker-end=\"url(#arrow)\"");
            }
        }
    }

    for (const DotIndex& dot : kAllDots) {
        if (opts.labels) out << "  <!-- dot " << detail::dot_token(dot) << " -->\n";
        detail::svg_circle(out, view, "dot", to_rat(dot.coords(basis)), cell / 8,
                           " fill=\"#000000\"");
    }

    IntVec2 circled = Int(diagram.selector.c1) * basis.col1 + Int(diagram.selector.c2) * basis.col2;
    if (opts.labels)
        out << "  <!-- translate " << detail::selector_token(diagram.selector) << " -->\n";
    out << "  <circle class=\"mark\" cx=\"" << detail::svg_num(view.x(Rat(circled.x)))
        << "\" cy=\"" << detail::svg_num(view.y(Rat(circled.y))) << "\" r=\""
        << detail::svg_num(cell / 4) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace netpres
