#pragma once

#include "nnr3/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nnr3 {

// Deterministic SVG figure: outer polygon, inner polygon, triangle
// overlays. Coordinates are converted to doubles for display only.
std::string render_svg(const std::vector<std::vector<std::pair<double, double>>>& polygons,
                       const std::vector<std::vector<std::pair<double, double>>>& triangles);

void write_file(const std::string& path, const std::string& content);

template <class K>
std::vector<std::pair<double, double>> to_display(const ConvexPolygon<K>& poly) {
    std::vector<std::pair<double, double>> out;
    for (auto& p : poly.vertices()) out.push_back({p.x.to_double(), p.y.to_double()});
    return out;
}

template <class K>
void svg_render(const ConvexPolygon<K>& W, const ConvexPolygon<K>& V,
                const std::vector<TriangleCandidate<K>>& triangles, const std::string& path) {
    std::vector<std::vector<std::pair<double, double>>> polys{to_display(W), to_display(V)};
    std::vector<std::vector<std::pair<double, double>>> tris;
    for (auto& t : triangles) {
        std::vector<std::pair<double, double>> tri;
        for (auto& p : t.verts) tri.push_back({p.x.to_double(), p.y.to_double()});
        tris.push_back(std::move(tri));
    }
    write_file(path, render_svg(polys, tris));
}

}  // namespace nnr3
