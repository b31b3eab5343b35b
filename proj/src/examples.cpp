#include "nnr3/examples.hpp"

#include <cmath>
#include <sstream>

namespace nnr3 {

namespace {

template <class K>
bool is_convex_ccw(const std::vector<Pt<K>>& v) {
    if (v.size() < 3) return false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cross(v[i], v[(i + 1) % n], v[(i + 2) % n]).sign() <= 0) return false;
    return true;
}

template <class K>
Matrix<K> facet_lift(const ConvexPolygon<K>& W, const ConvexPolygon<K>& points,
                     const Pt<K>& interior) {
    Matrix<K> m(W.size(), points.size());
    for (std::size_t i = 0; i < W.size(); ++i) {
        HalfPlane<K> h = HalfPlane<K>::through(W.vertex(i), W.vertex(i + 1), interior);
        for (std::size_t j = 0; j < points.size(); ++j) m(i, j) = h.eval(points.vertex(j));
    }
    return m;
}

template <class K>
Matrix<K> drop_column(const Matrix<K>& m, std::size_t col) {
    Matrix<K> out(m.rows(), m.cols() - 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0, jj = 0; j < m.cols(); ++j)
            if (j != col) out(i, jj++) = m(i, j);
    return out;
}

template <class K>
std::string pt_str(const Pt<K>& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

}  // namespace

MoitraExample moitra_example(unsigned n, const Rational& eps, unsigned long precision) {
    if (n < 2) throw GeometryError("DEGENERATE_INPUT", "need n >= 2");
    if (eps.sign() <= 0) throw GeometryError("DEGENERATE_INPUT", "eps must be positive");
    const unsigned N = 3 * n;

    MoitraExample ex;
    ex.n = n;
    ex.eps = eps;
    ex.precision = precision;
    auto fail = [&](const std::string& msg) { ex.report.failures.push_back(msg); };

    // Rational approximation of the regular 3n-gon, counterclockwise.
    std::vector<Pt<Rational>> w(N);
    const double pi = std::acos(-1.0);
    for (unsigned i = 0; i < N; ++i) {
        double th = 2.0 * pi * i / N;
        w[i] = {approx_rational(std::cos(th), precision), approx_rational(std::sin(th), precision)};
    }
    ex.W = ConvexPolygon<Rational>(w);
    const Pt<Rational> origin{Rational(0), Rational(0)};

    // V is cut out by the chords l_i = w_i w_{i+n}.
    std::vector<HalfPlane<Rational>> chords;
    for (unsigned i = 0; i < N; ++i)
        chords.push_back(HalfPlane<Rational>::through(w[i], w[(i + n) % N], origin));
    ex.V = halfplane_intersection(chords);

    // V' expands V away from the center.
    Rational grow = Rational(1) + eps;
    std::vector<Pt<Rational>> vp;
    for (auto& p : ex.V.vertices()) vp.push_back(p.scaled(grow));
    ex.Vprime = ConvexPolygon<Rational>(vp);

    ex.report.shapes_ok = is_convex_ccw(ex.W.vertices()) && ex.W.size() == N &&
                          ex.V.size() == N && is_convex_ccw(vp);
    for (auto& p : vp)
        if (!ex.W.strictly_contains(p)) ex.report.shapes_ok = false;
    if (!ex.report.shapes_ok) {
        fail("shape construction failed; raise precision or lower eps");
        ex.matrix = Matrix<Rational>(N, N);
        return ex;
    }

    ex.matrix = facet_lift(ex.W, ex.Vprime, origin);

    // (i) no candidate triangle contains V', so the matrix has nonnegative
    // rank at least 4.
    ex.report.no_triangle_contains_vprime = true;
    for (auto& c : candidate_triangles(ex.W, ex.Vprime))
        if (c.valid()) {
            ex.report.no_triangle_contains_vprime = false;
            fail("candidate triangle at anchor " + std::to_string(c.anchor_index) +
                 " contains V'");
        }

    // (ii) each delta_w(W, V', w_i) contains every V'-vertex except the two
    // whose V-counterparts lie on the chord w_{i+n} w_{i+2n}.
    ex.report.deltas_cover_all_but_edge_pairs = true;
    for (unsigned i = 0; i < N; ++i) {
        auto tri = delta_w(ex.W, ex.Vprime, i).polygon();
        const HalfPlane<Rational>& opposite = chords[(i + n) % N];
        unsigned excluded = 0;
        for (std::size_t k = 0; k < N; ++k) {
            bool on_chord = opposite.eval(ex.V.vertex(k)).is_zero();
            bool inside = tri.contains(ex.Vprime.vertex(k));
            if (on_chord) ++excluded;
            if (on_chord == inside) {
                ex.report.deltas_cover_all_but_edge_pairs = false;
                fail("delta_w anchor " + std::to_string(i) + ", vertex " + std::to_string(k) +
                     (on_chord ? ": excluded vertex inside" : ": kept vertex outside"));
            }
        }
        if (excluded != 2) {
            ex.report.deltas_cover_all_but_edge_pairs = false;
            fail("chord " + std::to_string((i + n) % N) + " meets " + std::to_string(excluded) +
                 " V-vertices, expected 2");
        }
    }

    // A maximal guaranteed-wide submatrix: any subset of fewer than 3n/2
    // columns misses an adjacent vertex pair, hence fits in some delta_w.
    ex.report.max_guaranteed_columns = (N + 1) / 2 - 1;
    {
        unsigned k = ex.report.max_guaranteed_columns;
        Matrix<Rational> sub(N, k);
        for (unsigned i = 0; i < N; ++i)
            for (unsigned j = 0; j < k; ++j) sub(i, j) = ex.matrix(i, j);
        auto dec = nnrank_le3(sub);
        ex.report.submatrix_spot_check = dec.value;
        if (!dec.value) fail("spot-check submatrix of " + std::to_string(k) + " columns failed");
    }
    return ex;
}

SquareExample square_example(const Rational& eps) {
    using K = Quad2;
    if (eps.sign() <= 0 || eps > Rational(1, 10))
        throw GeometryError("DEGENERATE_INPUT", "eps must be in (0, 1/10]");

    SquareExample ex;
    ex.eps = eps;
    auto fail = [&](const std::string& msg) { ex.report.failures.push_back(msg); };

    const K zero(0), one(1);
    const K half{Rational(1, 2)};
    const Pt<K> center{half, half};
    std::vector<Pt<K>> sq{{zero, zero}, {one, zero}, {one, one}, {zero, one}};
    ex.W = ConvexPolygon<K>(sq);

    const K t{Rational(-1), Rational(1)};  // tan(pi/8)  = sqrt(2) - 1
    const K T{Rational(1), Rational(1)};   // tan(3pi/8) = sqrt(2) + 1

    // the two corner lines at each vertex, at angles pi/8 and 3pi/8 to the
    // outgoing counterclockwise edge
    std::vector<HalfPlane<K>> lines;
    auto add = [&](const Pt<K>& w, const Pt<K>& d) {
        lines.push_back(HalfPlane<K>::through(w, w + d, center));
    };
    add(sq[0], {one, t});
    add(sq[0], {one, T});
    add(sq[1], {-t, one});
    add(sq[1], {-T, one});
    add(sq[2], {-one, -t});
    add(sq[2], {-one, -T});
    add(sq[3], {t, -one});
    add(sq[3], {T, -one});

    ex.V = halfplane_intersection(lines);
    if (ex.V.size() != 8) throw GeometryError("DEGENERATE_INPUT", "octagon construction failed");

    // angular vertices sit on the corner bisectors, perpendicular vertices
    // on the edge bisectors
    std::vector<Pt<K>> vp = ex.V.vertices();
    for (std::size_t k = 0; k < 8; ++k) {
        const Pt<K>& v = ex.V.vertex(k);
        if (v.x == half || v.y == half) {
            ex.perpendicular.push_back(k);
            Pt<K>& p = vp[k];
            if (v.x == half)
                p.y = v.y < half ? v.y - K(eps) : v.y + K(eps);
            else
                p.x = v.x < half ? v.x - K(eps) : v.x + K(eps);
        } else if (v.x == v.y || v.x + v.y == one) {
            ex.angular.push_back(k);
        } else {
            throw GeometryError("DEGENERATE_INPUT", "unclassifiable octagon vertex");
        }
    }
    if (ex.angular.size() != 4 || ex.perpendicular.size() != 4)
        throw GeometryError("DEGENERATE_INPUT", "vertex classification failed");
    ex.Vprime = ConvexPolygon<K>(vp);
    if (!is_convex_ccw(vp)) throw GeometryError("DEGENERATE_INPUT", "eps too large: V' not convex");
    for (auto& p : vp)
        if (!ex.W.strictly_contains(p))
            throw GeometryError("DEGENERATE_INPUT", "eps too large: V' leaves the square");

    ex.matrix = facet_lift(ex.W, ex.Vprime, center);
    ex.matrix_unperturbed = facet_lift(ex.W, ex.V, center);

    // (i) the unperturbed configuration is a boundary point of the model
    ex.report.boundary_at_base =
        boundary_test(ex.matrix_unperturbed).verdict == BoundaryVerdict::BOUNDARY;
    if (!ex.report.boundary_at_base) fail("base configuration not on the boundary");

    // (ii) no candidate triangle contains V'
    ex.report.vprime_no_triangle = true;
    for (auto& c : candidate_triangles(ex.W, ex.Vprime))
        if (c.valid()) {
            ex.report.vprime_no_triangle = false;
            fail("candidate triangle contains V'");
        }

    // (iii) deleting an angular vertex: the rest of V' fits in the delta_w
    // anchored across from it
    ex.report.angular_deletions = true;
    for (std::size_t ai : ex.angular) {
        const Pt<K>& v = ex.V.vertex(ai);
        Pt<K> across = v.x == v.y ? (v.x < half ? sq[2] : sq[0]) : (v.x < half ? sq[1] : sq[3]);
        std::size_t w_idx = 0;
        while (ex.W.vertex(w_idx) != across) ++w_idx;

        std::vector<Pt<K>> rest;
        for (std::size_t k = 0; k < 8; ++k)
            if (k != ai) rest.push_back(ex.Vprime.vertex(k));
        bool contained = delta_w(ex.W, ConvexPolygon<K>(rest), w_idx).contains_V;
        bool rank3 = nnrank_le3(drop_column(ex.matrix, ai)).value;
        if (!contained || !rank3) {
            ex.report.angular_deletions = false;
            fail("angular deletion at vertex " + std::to_string(ai) + " not rank 3");
        }
    }

    // (iv) deleting a perpendicular vertex: the delta_e of the new edge is
    // contained in W, with the apex exactly on the boundary (tight fit)
    ex.report.perpendicular_deletions = true;
    for (std::size_t pi : ex.perpendicular) {
        std::vector<Pt<K>> rest;
        for (std::size_t k = 0; k < 8; ++k)
            if (k != pi) rest.push_back(ex.Vprime.vertex(k));
        ConvexPolygon<K> v7(rest);
        Pt<K> a = ex.Vprime.vertex((pi + 7) % 8), b = ex.Vprime.vertex((pi + 1) % 8);
        std::size_t e_idx = 0;
        while (!(v7.vertex(e_idx) == a && v7.vertex(e_idx + 1) == b)) ++e_idx;

        auto tri = delta_e(ex.W, v7, e_idx);
        bool ok = tri.has_value() && tri->contains_V && tri->inside_W;
        bool rank3 = nnrank_le3(drop_column(ex.matrix, pi)).value;
        if (ok) {
            // the apex is the triangle vertex off the line of the new edge
            for (auto& q : tri->verts)
                if (!cross(a, b, q).is_zero()) {
                    if (ex.W.on_boundary(q))
                        ex.report.tight_fits.push_back("apex " + pt_str(q) +
                                                       " lies exactly on the square boundary");
                    else
                        ok = false;
                }
        }
        if (!ok || !rank3) {
            ex.report.perpendicular_deletions = false;
            fail("perpendicular deletion at vertex " + std::to_string(pi) + " failed");
        }
    }
    return ex;
}

Matrix<Rational> square_slope_matrix(const Rational& slope) {
    using K = Rational;
    if (slope.sign() <= 0 || slope >= Rational(1))
        throw GeometryError("DEGENERATE_INPUT", "slope must be in (0, 1)");
    const K zero(0), one(1), half(1, 2);
    const Pt<K> center{half, half};
    std::vector<Pt<K>> sq{{zero, zero}, {one, zero}, {one, one}, {zero, one}};
    ConvexPolygon<K> W(sq);
    const K t = slope, T = Rational(1) / slope;
    std::vector<HalfPlane<K>> lines;
    auto add = [&](const Pt<K>& w, const Pt<K>& d) {
        lines.push_back(HalfPlane<K>::through(w, w + d, center));
    };
    add(sq[0], {one, t});
    add(sq[0], {one, T});
    add(sq[1], {-t, one});
    add(sq[1], {-T, one});
    add(sq[2], {-one, -t});
    add(sq[2], {-one, -T});
    add(sq[3], {t, -one});
    add(sq[3], {T, -one});
    ConvexPolygon<K> V = halfplane_intersection(lines);
    if (V.degenerate()) throw GeometryError("DEGENERATE_INPUT", "slope polygon degenerate");
    return facet_lift(W, V, center);
}

Matrix<Rational> square_slack_matrix() {
    Matrix<Rational> m(4, 4);
    const int entries[4][4] = {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}};
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) m(i, j) = Rational(entries[i][j]);
    return m;
}

}  // namespace nnr3
