#include "nnr3/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace nnr3 {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<std::vector<std::pair<double, double>>>& polygons,
                       const std::vector<std::vector<std::pair<double, double>>>& triangles) {
    const double size = 800.0, margin = 40.0;
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_y;
    auto widen = [&](const std::vector<std::pair<double, double>>& pts) {
        for (auto& [x, y] : pts) {
            lo_x = std::min(lo_x, x);
            hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y);
            hi_y = std::max(hi_y, y);
        }
    };
    for (auto& p : polygons) widen(p);
    for (auto& t : triangles) widen(t);
    if (!(lo_x <= hi_x)) {
        lo_x = lo_y = 0.0;
        hi_x = hi_y = 1.0;
    }
    double span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (span <= 0.0) span = 1.0;
    double scale = (size - 2 * margin) / span;
    auto tx = [&](double x) { return margin + (x - lo_x) * scale; };
    auto ty = [&](double y) { return size - margin - (y - lo_y) * scale; };  // y up

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    auto emit = [&](const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        svg += "  <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) svg += " ";
            svg += fmt(tx(pts[i].first)) + "," + fmt(ty(pts[i].second));
        }
        svg += "\" " + style + "/>\n";
    };
    static const char* poly_styles[2] = {
        "fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"",
        "fill=\"#d0e0ff\" stroke=\"#2040a0\" stroke-width=\"2\""};
    for (std::size_t i = 0; i < polygons.size(); ++i)
        emit(polygons[i], poly_styles[std::min<std::size_t>(i, 1)]);
    for (auto& t : triangles)
        emit(t, "fill=\"none\" stroke=\"#c03030\" stroke-width=\"1\" stroke-dasharray=\"6,3\"");
    svg += "</svg>\n";
    return svg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nnr3
