#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "array_design.hpp"
#include "lattice.hpp"

namespace crtarray {

struct RenderOptions {
    double scale = 36.0;        // pixels per unit sensor spacing
    bool show_voronoi = false;  // outline the period cells of p*ring and 2p*ring
    bool coarray_panel = false; // add a second panel with the cross-difference points
};

namespace detail {

inline std::string format_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Hexagonal designs read more naturally with a lattice axis running
// vertically, so the whole picture is turned a quarter turn.
inline std::pair<double, double> turn_xy(const RingSpec& ring, double x, double y) {
    if (ring.D == -3) return {-y, x};
    return {x, y};
}

inline std::pair<double, double> render_xy(const RingSpec& ring, const Coord& c) {
    auto [x, y] = embed_xy(ring, c);
    return turn_xy(ring, x, y);
}

inline std::string svg_star(double cx, double cy, double outer, double inner,
                            const char* fill) {
    constexpr double pi = 3.14159265358979323846;
    std::string pts;
    for (int k = 0; k < 10; ++k) {
        double angle = -pi / 2.0 + k * pi / 5.0;
        double r = (k % 2 == 0) ? outer : inner;
        if (k) pts += ' ';
        pts += format_px(cx + r * std::cos(angle)) + ',' + format_px(cy + r * std::sin(angle));
    }
    return "<polygon points=\"" + pts + "\" fill=\"" + fill + "\"/>\n";
}

// Extent tracker for one panel; pads by a fixed margin in lattice units.
struct PanelBox {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    void widen(std::pair<double, double> xy) {
        min_x = std::min(min_x, xy.first);
        max_x = std::max(max_x, xy.first);
        min_y = std::min(min_y, xy.second);
        max_y = std::max(max_y, xy.second);
    }
};

}  // namespace detail

// Deterministic SVG 1.1 picture of the physical array: subarray1 sensors as
// stars, subarray2 sensors as dots, the shared origin drawn as a star over
// its dot. Optional black outlines show the Voronoi cells of p*ring and (for
// hole-free designs) 2p*ring that frame the subarrays, and an optional
// second panel plots the cross-difference coarray. All numbers use fixed
// three-decimal formatting.
inline std::string render_svg(const ArrayDesign& design, const RenderOptions& opts = {}) {
    const double margin = 1.5;
    detail::PanelBox main_box;
    for (const Coord& c : design.subarray1) main_box.widen(detail::render_xy(design.ring, c));
    for (const Coord& c : design.subarray2) main_box.widen(detail::render_xy(design.ring, c));

    std::vector<std::vector<std::pair<double, double>>> outlines;
    if (opts.show_voronoi) {
        for (int64_t span : design.variant == ArrayVariant::Hscrt
                                ? std::vector<int64_t>{design.p, 2 * design.p}
                                : std::vector<int64_t>{design.p}) {
            Lattice period = scaled_lattice(full_lattice(design.ring), span);
            std::vector<std::pair<double, double>> turned;
            for (auto [x, y] : voronoi_cell_polygon(period)) {
                turned.push_back(detail::turn_xy(design.ring, x, y));
                main_box.widen(turned.back());
            }
            outlines.push_back(std::move(turned));
        }
    }

    std::vector<Coord> coarray_pts;
    detail::PanelBox co_box;
    if (opts.coarray_panel) {
        coarray_pts = coarray_points(cross_difference(design));
        for (const Coord& c : coarray_pts) co_box.widen(detail::render_xy(design.ring, c));
    }

    double main_width = (main_box.max_x - main_box.min_x + 2 * margin) * opts.scale;
    double main_height = (main_box.max_y - main_box.min_y + 2 * margin) * opts.scale;
    double co_width =
        opts.coarray_panel ? (co_box.max_x - co_box.min_x + 2 * margin) * opts.scale : 0.0;
    double co_height =
        opts.coarray_panel ? (co_box.max_y - co_box.min_y + 2 * margin) * opts.scale : 0.0;
    double width = main_width + co_width;
    double height = std::max(main_height, co_height);

    // SVG y grows downward; flip the embedding's y axis in both panels.
    auto main_px = [&](std::pair<double, double> xy) {
        return std::pair<double, double>{(xy.first - main_box.min_x + margin) * opts.scale,
                                         (main_box.max_y - xy.second + margin) * opts.scale};
    };
    auto co_px = [&](std::pair<double, double> xy) {
        return std::pair<double, double>{
            main_width + (xy.first - co_box.min_x + margin) * opts.scale,
            (co_box.max_y - xy.second + margin) * opts.scale};
    };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::format_px(width) + "\" height=\"" + detail::format_px(height) +
           "\" viewBox=\"0 0 " + detail::format_px(width) + ' ' + detail::format_px(height) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const auto& outline : outlines) {
        std::string pts;
        for (auto xy : outline) {
            auto [px, py] = main_px(xy);
            if (!pts.empty()) pts += ' ';
            pts += detail::format_px(px) + ',' + detail::format_px(py);
        }
        out += "<polygon points=\"" + pts +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }

    for (const Coord& c : design.subarray2) {
        auto [px, py] = main_px(detail::render_xy(design.ring, c));
        out += "<circle cx=\"" + detail::format_px(px) + "\" cy=\"" + detail::format_px(py) +
               "\" r=\"4.000\" fill=\"#1f77b4\"/>\n";
    }
    for (const Coord& c : design.subarray1) {
        auto [px, py] = main_px(detail::render_xy(design.ring, c));
        out += detail::svg_star(px, py, 7.0, 2.8, "#d62728");
    }

    for (const Coord& c : coarray_pts) {
        auto [px, py] = co_px(detail::render_xy(design.ring, c));
        out += "<circle cx=\"" + detail::format_px(px) + "\" cy=\"" + detail::format_px(py) +
               "\" r=\"2.000\" fill=\"#2ca02c\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace crtarray
