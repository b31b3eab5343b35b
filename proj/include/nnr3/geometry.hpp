#pragma once

#include "nnr3/matrix.hpp"
#include "nnr3/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnr3 {

// Exact 2-D geometry of the nested-polygon formulation of nonnegative rank
// three: the simplex-slice polygons V inside W of a rank-3 nonnegative
// matrix, the vertex- and edge-anchored candidate triangles, and the
// rank/boundary decisions. Every predicate is an exact sign computation in
// the scalar field K (rationals or a quadratic extension).

struct GeometryError : std::runtime_error {
    std::string code;  // RANK_ERROR, DEGENERATE_INPUT, INVALID_ANCHOR, REQUIRES_POSITIVE
    GeometryError(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

template <class K>
struct Pt {
    K x, y;
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt scaled(const K& c) const { return {x * c, y * c}; }
};

template <class K>
K cross(const Pt<K>& u, const Pt<K>& v) {
    return u.x * v.y - u.y * v.x;
}

template <class K>
K cross(const Pt<K>& o, const Pt<K>& a, const Pt<K>& b) {
    return cross(a - o, b - o);
}

template <class K>
K dot(const Pt<K>& u, const Pt<K>& v) {
    return u.x * v.x + u.y * v.y;
}

template <class K>
bool lex_less(const Pt<K>& a, const Pt<K>& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Half-plane a*x + b*y + c >= 0.
template <class K>
struct HalfPlane {
    K a, b, c;
    K eval(const Pt<K>& p) const { return a * p.x + b * p.y + c; }
    static HalfPlane through(const Pt<K>& p, const Pt<K>& q, const Pt<K>& inside) {
        // line through p, q; sign oriented so `inside` is nonnegative
        HalfPlane h{q.y - p.y, p.x - q.x, cross(q, p)};
        if (h.eval(inside).sign() < 0) h = {-h.a, -h.b, -h.c};
        return h;
    }
};

template <class K>
std::optional<Pt<K>> line_intersection(const HalfPlane<K>& g, const HalfPlane<K>& h) {
    K det = g.a * h.b - g.b * h.a;
    if (det.is_zero()) return std::nullopt;
    return Pt<K>{(g.b * h.c - g.c * h.b) / det, (g.c * h.a - g.a * h.c) / det};
}

template <class K>
class ConvexPolygon {
public:
    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Pt<K>> ccw_vertices) : v_(std::move(ccw_vertices)) {}

    // Convex hull (monotone chain); collinear points dropped, CCW output.
    static ConvexPolygon hull(std::vector<Pt<K>> pts) {
        std::sort(pts.begin(), pts.end(), lex_less<K>);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() <= 2) return ConvexPolygon(std::move(pts));
        std::vector<Pt<K>> h(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
            h[k++] = pts[i];
        }
        std::size_t lower = k + 1;
        for (std::size_t i = pts.size() - 1; i-- > 0;) {
            while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
            h[k++] = pts[i];
        }
        h.resize(k - 1);
        return ConvexPolygon(std::move(h));
    }

    const std::vector<Pt<K>>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Pt<K>& vertex(std::size_t i) const { return v_[i % v_.size()]; }

    bool degenerate() const { return v_.size() < 3; }

    K area2() const {  // twice the signed area
        K s(0);
        for (std::size_t i = 0; i < v_.size(); ++i) s += cross(v_[i], vertex(i + 1));
        return s;
    }

    bool contains(const Pt<K>& p) const {
        if (v_.empty()) return false;
        if (v_.size() == 1) return p == v_[0];
        if (v_.size() == 2)
            return cross(v_[0], v_[1], p).is_zero() && dot(p - v_[0], v_[1] - v_[0]).sign() >= 0 &&
                   dot(p - v_[1], v_[0] - v_[1]).sign() >= 0;
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (cross(v_[i], vertex(i + 1), p).sign() < 0) return false;
        return true;
    }

    bool strictly_contains(const Pt<K>& p) const {
        if (v_.size() < 3) return false;
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (cross(v_[i], vertex(i + 1), p).sign() <= 0) return false;
        return true;
    }

    bool on_boundary(const Pt<K>& p) const { return contains(p) && !strictly_contains(p); }

    bool contains_polygon(const ConvexPolygon& o) const {
        for (auto& p : o.v_)
            if (!contains(p)) return false;
        return true;
    }

private:
    std::vector<Pt<K>> v_;
};

// Bounded intersection of half-planes: all pairwise line intersections
// that satisfy every constraint, hulled. Quadratic in the constraint
// count, which is small here.
template <class K>
ConvexPolygon<K> halfplane_intersection(const std::vector<HalfPlane<K>>& hs) {
    std::vector<Pt<K>> pts;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            auto p = line_intersection(hs[i], hs[j]);
            if (!p) continue;
            bool ok = true;
            for (auto& h : hs)
                if (h.eval(*p).sign() < 0) {
                    ok = false;
                    break;
                }
            if (ok) pts.push_back(*p);
        }
    return ConvexPolygon<K>::hull(std::move(pts));
}

// Affine 2-D coordinates on Span(M) intersected with the hyperplane
// {sum x_i = 1}, with the m coordinate functionals restricted to the chart.
template <class K>
struct Chart {
    unsigned m = 0;
    std::vector<K> origin, u, v;  // chart point (s,t) lifts to origin + s*u + t*v

    Pt<K> to_chart(const std::vector<K>& point) const {
        // exact solve of the (consistent) m x 2 system u*s + v*t = point - origin
        Matrix<K> sys(m, 2);
        std::vector<K> rhs(m);
        for (unsigned i = 0; i < m; ++i) {
            sys(i, 0) = u[i];
            sys(i, 1) = v[i];
            rhs[i] = point[i] - origin[i];
        }
        auto sol = sys.solve(rhs);
        if (!sol) throw GeometryError("DEGENERATE_INPUT", "point not on the chart plane");
        return {(*sol)[0], (*sol)[1]};
    }

    std::vector<K> lift(const Pt<K>& p) const {
        std::vector<K> out(m);
        for (unsigned i = 0; i < m; ++i) out[i] = origin[i] + p.x * u[i] + p.y * v[i];
        return out;
    }

    // restriction of x_i >= 0 to the chart
    HalfPlane<K> facet(unsigned i) const { return {u[i], v[i], origin[i]}; }
};

template <class K>
struct ChartTriple {
    Chart<K> chart;
    ConvexPolygon<K> V, W;
    std::vector<Pt<K>> columns;     // normalized columns in chart order
    std::vector<K> column_sums;
};

// Build the chart and the nested polygons V (hull of normalized columns)
// and W (simplex slice) of a nonnegative rank-3 matrix.
template <class K>
ChartTriple<K> chart_from_matrix(const Matrix<K>& mat) {
    const unsigned m = static_cast<unsigned>(mat.rows());
    const unsigned n = static_cast<unsigned>(mat.cols());
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (mat(i, j).sign() < 0)
                throw GeometryError("DEGENERATE_INPUT", "negative entry");
    if (mat.rank() != 3) throw GeometryError("RANK_ERROR", "rank is not 3");

    std::vector<std::vector<K>> cols(n, std::vector<K>(m));
    std::vector<K> sums(n, K(0));
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < m; ++i) sums[j] += mat(i, j);
        if (sums[j].is_zero()) throw GeometryError("DEGENERATE_INPUT", "zero column");
        for (unsigned i = 0; i < m; ++i) cols[j][i] = mat(i, j) / sums[j];
    }

    // three affinely independent normalized columns give the chart frame
    ChartTriple<K> out;
    out.chart.m = m;
    out.chart.origin = cols[0];
    unsigned j1 = 0, j2 = 0;
    {
        Matrix<K> probe(m, 2);
        for (unsigned j = 1; j < n && j2 == 0; ++j) {
            if (j1 == 0) {
                bool same = true;
                for (unsigned i = 0; i < m; ++i)
                    if (cols[j][i] != cols[0][i]) same = false;
                if (!same) j1 = j;
                continue;
            }
            for (unsigned i = 0; i < m; ++i) {
                probe(i, 0) = cols[j1][i] - cols[0][i];
                probe(i, 1) = cols[j][i] - cols[0][i];
            }
            if (probe.rank() == 2) j2 = j;
        }
    }
    if (j2 == 0) throw GeometryError("RANK_ERROR", "columns affinely dependent");
    out.chart.u.resize(m);
    out.chart.v.resize(m);
    for (unsigned i = 0; i < m; ++i) {
        out.chart.u[i] = cols[j1][i] - cols[0][i];
        out.chart.v[i] = cols[j2][i] - cols[0][i];
    }

    out.column_sums = sums;
    for (unsigned j = 0; j < n; ++j) out.columns.push_back(out.chart.to_chart(cols[j]));
    out.V = ConvexPolygon<K>::hull(out.columns);

    std::vector<HalfPlane<K>> facets;
    for (unsigned i = 0; i < m; ++i) facets.push_back(out.chart.facet(i));
    out.W = halfplane_intersection(facets);
    if (out.W.degenerate()) throw GeometryError("DEGENERATE_INPUT", "flat simplex slice");
    return out;
}

enum class TriangleProvenance { VertexAnchored, EdgeAnchored };

template <class K>
struct TriangleCandidate {
    std::array<Pt<K>, 3> verts;  // CCW
    TriangleProvenance provenance;
    std::size_t anchor_index = 0;  // vertex index of W, or edge index of V
    bool contains_V = false;
    bool inside_W = false;

    ConvexPolygon<K> polygon() const {
        return ConvexPolygon<K>::hull({verts[0], verts[1], verts[2]});
    }
    bool degenerate() const { return polygon().size() < 3; }
    bool valid() const { return contains_V && inside_W && !degenerate(); }

    std::array<Pt<K>, 3> sorted_verts() const {
        auto s = verts;
        std::sort(s.begin(), s.end(), lex_less<K>);
        return s;
    }
};

namespace geometry_detail {

// The two extreme directions (as vertex indices of V) of the minimal cone
// at p containing V; first = clockwise-most, second = counterclockwise-most.
// Ties along a ray are broken toward the farthest vertex.
template <class K>
std::pair<std::size_t, std::size_t> cone_extremes(const ConvexPolygon<K>& V, const Pt<K>& p) {
    if (V.contains(p)) throw GeometryError("INVALID_ANCHOR", "anchor lies in the polygon");
    auto dir = [&](std::size_t i) { return V.vertex(i) - p; };
    auto more_cw = [&](std::size_t a, std::size_t b) {  // a strictly more clockwise than b
        int s = cross(dir(a), dir(b)).sign();
        if (s != 0) return s > 0;
        return dot(dir(a), dir(a)) > dot(dir(b), dir(b));  // farther wins on the ray
    };
    std::size_t cw = 0, ccw = 0;
    for (std::size_t i = 1; i < V.size(); ++i) {
        if (more_cw(i, cw)) cw = i;
        if (more_cw(ccw, i)) ccw = i;
    }
    return {cw, ccw};
}

// Furthest point of the ray p + t*d (t >= 0) inside the convex polygon W;
// requires p in W. Exact parameters; returns the exit point.
template <class K>
Pt<K> ray_exit(const ConvexPolygon<K>& W, const Pt<K>& p, const Pt<K>& d) {
    std::optional<K> best;
    for (std::size_t i = 0; i < W.size(); ++i) {
        Pt<K> a = W.vertex(i), b = W.vertex(i + 1);
        K denom = cross(b - a, d);
        if (denom.is_zero()) {
            if (!cross(a, b, p).is_zero()) continue;  // parallel, off the line
            for (const Pt<K>& q : {a, b}) {
                K t = dot(q - p, d) / dot(d, d);
                if (t.sign() >= 0 && (!best || t > *best)) best = t;
            }
            continue;
        }
        K t = -cross(b - a, p - a) / denom;
        if (t.sign() < 0) continue;
        Pt<K> q = p + d.scaled(t);
        if (W.contains(q) && (!best || t > *best)) best = t;
    }
    if (!best) throw GeometryError("DEGENERATE_INPUT", "ray does not meet the polygon");
    return p + d.scaled(*best);
}

// Both intersection points of the full line p + t*d with the boundary of
// W, ordered by the parameter t (smallest first).
template <class K>
std::pair<Pt<K>, Pt<K>> line_exits(const ConvexPolygon<K>& W, const Pt<K>& p, const Pt<K>& d) {
    std::optional<K> lo, hi;
    for (std::size_t i = 0; i < W.size(); ++i) {
        Pt<K> a = W.vertex(i), b = W.vertex(i + 1);
        K denom = cross(b - a, d);
        if (denom.is_zero()) {
            if (!cross(a, b, p).is_zero()) continue;
            for (const Pt<K>& q : {a, b}) {
                K t = dot(q - p, d) / dot(d, d);
                if (!lo || t < *lo) lo = t;
                if (!hi || t > *hi) hi = t;
            }
            continue;
        }
        K t = -cross(b - a, p - a) / denom;
        Pt<K> q = p + d.scaled(t);
        if (!W.contains(q)) continue;
        if (!lo || t < *lo) lo = t;
        if (!hi || t > *hi) hi = t;
    }
    if (!lo || !hi || *lo == *hi)
        throw GeometryError("DEGENERATE_INPUT", "line does not cross the polygon");
    return {p + d.scaled(*lo), p + d.scaled(*hi)};
}

template <class K>
std::array<Pt<K>, 3> ccw_triangle(Pt<K> a, Pt<K> b, Pt<K> c) {
    if (cross(a, b, c).sign() < 0) std::swap(b, c);
    return {a, b, c};
}

template <class K>
bool triangle_contains(const std::array<Pt<K>, 3>& t, const Pt<K>& p) {
    int s01 = cross(t[0], t[1], p).sign();
    int s12 = cross(t[1], t[2], p).sign();
    int s20 = cross(t[2], t[0], p).sign();
    return s01 >= 0 && s12 >= 0 && s20 >= 0;  // CCW triangles only
}

}  // namespace geometry_detail

// Vertex-anchored candidate: the minimal cone at the W-vertex w containing
// V, each extreme ray extended to its furthest boundary point of W.
template <class K>
TriangleCandidate<K> delta_w(const ConvexPolygon<K>& W, const ConvexPolygon<K>& V,
                             std::size_t w_index) {
    using namespace geometry_detail;
    if (V.degenerate()) throw GeometryError("DEGENERATE_INPUT", "inner polygon is degenerate");
    const Pt<K>& w = W.vertex(w_index);
    auto [cw, ccw] = cone_extremes(V, w);
    Pt<K> w1 = ray_exit(W, w, V.vertex(cw) - w);
    Pt<K> w2 = ray_exit(W, w, V.vertex(ccw) - w);

    TriangleCandidate<K> t;
    t.verts = ccw_triangle(w, w1, w2);
    t.provenance = TriangleProvenance::VertexAnchored;
    t.anchor_index = w_index;
    t.inside_W = true;  // vertices on W, W convex
    t.contains_V = true;
    for (auto& p : V.vertices())
        if (!triangle_contains(t.verts, p)) t.contains_V = false;
    return t;
}

// Edge-anchored candidate: the line of the V-edge cut by W at w1, w2, and
// at each wi the extreme ray of the cone over V not containing the edge;
// defined when those rays meet inside W.
template <class K>
std::optional<TriangleCandidate<K>> delta_e(const ConvexPolygon<K>& W, const ConvexPolygon<K>& V,
                                            std::size_t e_index) {
    using namespace geometry_detail;
    if (V.degenerate()) throw GeometryError("DEGENERATE_INPUT", "inner polygon is degenerate");
    Pt<K> v1 = V.vertex(e_index), v2 = V.vertex(e_index + 1);
    auto [w1, w2] = line_exits(W, v1, v2 - v1);

    auto off_edge_ray = [&](const Pt<K>& w) -> Pt<K> {
        auto [cw, ccw] = cone_extremes(V, w);
        Pt<K> d1 = V.vertex(cw) - w, d2 = V.vertex(ccw) - w;
        bool d1_on_edge = cross(d1, v2 - v1).is_zero();
        bool d2_on_edge = cross(d2, v2 - v1).is_zero();
        if (d1_on_edge == d2_on_edge)
            throw GeometryError("DEGENERATE_INPUT", "cone rays indistinct at line exit");
        return d1_on_edge ? d2 : d1;
    };
    Pt<K> d1 = off_edge_ray(w1), d2 = off_edge_ray(w2);

    HalfPlane<K> l1{-(d1.y), d1.x, cross(w1, w1 + d1)};
    HalfPlane<K> l2{-(d2.y), d2.x, cross(w2, w2 + d2)};
    auto apex = line_intersection(l1, l2);
    if (!apex || !W.contains(*apex)) return std::nullopt;
    // the apex must be on the forward rays (not the opposite extensions)
    if (dot(*apex - w1, d1).sign() < 0 || dot(*apex - w2, d2).sign() < 0) return std::nullopt;

    TriangleCandidate<K> t;
    t.verts = ccw_triangle(w1, w2, *apex);
    t.provenance = TriangleProvenance::EdgeAnchored;
    t.anchor_index = e_index;
    t.inside_W = true;  // w1, w2 on W's boundary, apex checked above
    t.contains_V = true;
    for (auto& p : V.vertices())
        if (!triangle_contains(t.verts, p)) t.contains_V = false;
    return t;
}

// All vertex- and edge-anchored candidates, deduplicated by exact vertex
// sets (vertex-anchored representatives kept first).
template <class K>
std::vector<TriangleCandidate<K>> candidate_triangles(const ConvexPolygon<K>& W,
                                                      const ConvexPolygon<K>& V) {
    std::vector<TriangleCandidate<K>> out;
    auto push_unique = [&](const TriangleCandidate<K>& t) {
        for (auto& u : out)
            if (u.sorted_verts() == t.sorted_verts()) return;
        out.push_back(t);
    };
    for (std::size_t i = 0; i < W.size(); ++i) push_unique(delta_w(W, V, i));
    for (std::size_t i = 0; i < V.size(); ++i)
        if (auto t = delta_e(W, V, i)) push_unique(*t);
    return out;
}

template <class K>
struct NnrankResult {
    bool value = false;
    bool rank_fast_path = false;          // decided by rank <= 2 alone
    std::optional<TriangleCandidate<K>> witness;
    std::vector<TriangleCandidate<K>> candidates;  // exhausted list when false
    std::optional<std::pair<Matrix<K>, Matrix<K>>> factorization;
    std::string reason;                   // human-readable decision path
};

namespace geometry_detail {

// Barycentric coordinates of p in the CCW triangle t.
template <class K>
std::array<K, 3> barycentric(const std::array<Pt<K>, 3>& t, const Pt<K>& p) {
    K total = cross(t[0], t[1], t[2]);
    return {cross(p, t[1], t[2]) / total, cross(t[0], p, t[2]) / total,
            cross(t[0], t[1], p) / total};
}

}  // namespace geometry_detail

// Decide nonnegative rank <= 3 with a certificate: either the rank fast
// path, or a witness triangle nested between V and W converted to an exact
// nonnegative factorization.
namespace geometry_detail {

// Exact factorization from a witness triangle: A's columns are the lifted
// triangle vertices, B's columns the scaled barycentric weights.
template <class K>
std::pair<Matrix<K>, Matrix<K>> witness_factorization(const Matrix<K>& mat,
                                                      const ChartTriple<K>& ct,
                                                      const std::array<Pt<K>, 3>& tri) {
    const unsigned m = static_cast<unsigned>(mat.rows());
    const unsigned n = static_cast<unsigned>(mat.cols());
    Matrix<K> A(m, 3), B(3, n);
    for (unsigned k = 0; k < 3; ++k) {
        auto lifted = ct.chart.lift(tri[k]);
        for (unsigned i = 0; i < m; ++i) A(i, k) = lifted[i];
    }
    for (unsigned j = 0; j < n; ++j) {
        auto lam = barycentric(tri, ct.columns[j]);
        for (unsigned k = 0; k < 3; ++k) B(k, j) = lam[k] * ct.column_sums[j];
    }
    if (!(A * B == mat))
        throw GeometryError("DEGENERATE_INPUT", "certificate reproduction failed");
    return {std::move(A), std::move(B)};
}

}  // namespace geometry_detail

template <class K>
NnrankResult<K> nnrank_le3(const Matrix<K>& mat) {
    NnrankResult<K> res;
    std::size_t r = mat.rank();
    if (r > 3) throw GeometryError("RANK_ERROR", "rank exceeds 3");
    bool zero_entry = false;
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            if (mat(i, j).sign() < 0) throw GeometryError("DEGENERATE_INPUT", "negative entry");
            if (mat(i, j).is_zero()) zero_entry = true;
        }
    if (r <= 2) {
        res.value = true;
        res.rank_fast_path = true;
        res.reason = "rank <= 2: nonnegative rank equals rank";
        return res;
    }

    ChartTriple<K> ct = chart_from_matrix(mat);

    // V itself a triangle: it is nested between V and W by definition.
    if (ct.V.size() == 3) {
        res.value = true;
        res.reason = "inner polygon is a triangle";
        TriangleCandidate<K> w;
        w.verts = {ct.V.vertex(0), ct.V.vertex(1), ct.V.vertex(2)};
        w.provenance = TriangleProvenance::VertexAnchored;
        w.contains_V = w.inside_W = true;
        res.witness = w;
        res.factorization = geometry_detail::witness_factorization(mat, ct, w.verts);
        return res;
    }

    // V equal to W with more than three vertices: no triangle fits between.
    if (ct.V.size() == ct.W.size()) {
        bool equal = true;
        for (auto& p : ct.W.vertices())
            if (!ct.V.on_boundary(p)) equal = false;
        if (equal) {
            res.value = false;
            res.reason = "inner polygon equals the simplex slice with > 3 vertices";
            return res;
        }
    }

    if (zero_entry)
        throw GeometryError("REQUIRES_POSITIVE", "rank-3 input has zero entries");

    res.candidates = candidate_triangles(ct.W, ct.V);
    for (auto& c : res.candidates) {
        if (!c.valid()) continue;
        res.value = true;
        res.witness = c;
        res.reason = "witness triangle from the candidate family";
        res.factorization = geometry_detail::witness_factorization(mat, ct, c.verts);
        break;
    }
    if (!res.value) res.reason = "candidate family exhausted without a nested triangle";
    return res;
}

enum class BoundaryVerdict { INTERIOR, BOUNDARY, NOT_IN_MODEL };

template <class K>
struct BoundaryReport {
    BoundaryVerdict verdict = BoundaryVerdict::NOT_IN_MODEL;
    bool zero_entry = false;
    bool rank_le2 = false;
    struct CandidateStatus {
        TriangleCandidate<K> triangle;
        bool every_edge_touches_V = false;
        bool edge_contains_V_edge = false;
        bool vertex_on_W_vertex = false;
        bool boundary_conditions() const {
            return every_edge_touches_V && (edge_contains_V_edge || vertex_on_W_vertex);
        }
    };
    std::vector<CandidateStatus> candidates;  // valid candidates only
    // The conditions are evaluated over the vertex-/edge-anchored candidate
    // family, which suffices for the rank-3 positive case.
    std::string note = "conditions evaluated over the candidate family {delta_w, delta_e}";
};

namespace geometry_detail {

template <class K>
bool on_segment(const Pt<K>& a, const Pt<K>& b, const Pt<K>& p) {
    return cross(a, b, p).is_zero() && dot(p - a, b - a).sign() >= 0 &&
           dot(p - b, a - b).sign() >= 0;
}

}  // namespace geometry_detail

// Exact boundary trichotomy for rank <= 3 nonnegative matrices: a zero
// entry with certified membership is BOUNDARY; otherwise the incidence
// conditions are checked on every valid candidate triangle.
template <class K>
BoundaryReport<K> boundary_test(const Matrix<K>& mat) {
    using namespace geometry_detail;
    BoundaryReport<K> rep;
    std::size_t r = mat.rank();
    if (r > 3) throw GeometryError("RANK_ERROR", "rank exceeds 3");
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            if (mat(i, j).sign() < 0) throw GeometryError("DEGENERATE_INPUT", "negative entry");
            if (mat(i, j).is_zero()) rep.zero_entry = true;
        }
    if (r <= 2) {
        rep.rank_le2 = true;
        // nonnegative rank equals rank here, so the matrix is in the model
        rep.verdict = rep.zero_entry ? BoundaryVerdict::BOUNDARY : BoundaryVerdict::INTERIOR;
        return rep;
    }

    if (rep.zero_entry) {
        // membership decides the verdict: a zero entry puts any member of
        // the model on its boundary; non-members are NOT_IN_MODEL. May
        // surface REQUIRES_POSITIVE when membership itself is undecidable.
        rep.verdict = nnrank_le3(mat).value ? BoundaryVerdict::BOUNDARY
                                            : BoundaryVerdict::NOT_IN_MODEL;
        return rep;
    }

    ChartTriple<K> ct = chart_from_matrix(mat);
    std::vector<TriangleCandidate<K>> cands = candidate_triangles(ct.W, ct.V);

    bool any_valid = false, all_boundary = true;
    for (auto& c : cands) {
        if (!c.valid()) continue;
        any_valid = true;
        typename BoundaryReport<K>::CandidateStatus st;
        st.triangle = c;
        st.every_edge_touches_V = true;
        for (unsigned e = 0; e < 3; ++e) {
            Pt<K> a = c.verts[e], b = c.verts[(e + 1) % 3];
            bool touched = false, edge_on = false;
            for (std::size_t i = 0; i < ct.V.size(); ++i) {
                if (on_segment(a, b, ct.V.vertex(i))) {
                    touched = true;
                    if (on_segment(a, b, ct.V.vertex(i + 1))) edge_on = true;
                }
            }
            if (!touched) st.every_edge_touches_V = false;
            if (edge_on) st.edge_contains_V_edge = true;
        }
        for (auto& tv : c.verts)
            for (auto& wv : ct.W.vertices())
                if (tv == wv) st.vertex_on_W_vertex = true;
        if (!st.boundary_conditions()) all_boundary = false;
        rep.candidates.push_back(std::move(st));
    }

    if (!any_valid)
        rep.verdict = BoundaryVerdict::NOT_IN_MODEL;
    else
        rep.verdict = all_boundary ? BoundaryVerdict::BOUNDARY : BoundaryVerdict::INTERIOR;
    return rep;
}

}  // namespace nnr3
