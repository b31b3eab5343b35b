#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nnr3/examples.hpp"
#include "nnr3/geometry.hpp"
#include "nnr3/rng.hpp"
#include "nnr3/svg.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using namespace nnr3;

namespace {

using PtQ = Pt<Rational>;
using PolyQ = ConvexPolygon<Rational>;

PtQ pt(long x_num, long x_den, long y_num, long y_den) {
    return {Rational(x_num, x_den), Rational(y_num, y_den)};
}

Matrix<Rational> lift_points(const std::vector<PtQ>& pts) {
    // rows: the unit-square functionals y, 1-x, 1-y, x
    Matrix<Rational> m(4, pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
        m(0, j) = pts[j].y;
        m(1, j) = Rational(1) - pts[j].x;
        m(2, j) = Rational(1) - pts[j].y;
        m(3, j) = pts[j].x;
    }
    return m;
}

Matrix<Rational> random_positive_product(unsigned m, unsigned n, Rng& rng) {
    Matrix<Rational> a(m, 3), b(3, n);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k < 3; ++k) a(i, k) = rng.positive_rational();
    for (unsigned k = 0; k < 3; ++k)
        for (unsigned j = 0; j < n; ++j) b(k, j) = rng.positive_rational();
    return a * b;
}

std::set<std::pair<std::string, std::string>> vertex_set(const std::array<PtQ, 3>& t) {
    std::set<std::pair<std::string, std::string>> s;
    for (auto& p : t) s.insert({p.x.str(), p.y.str()});
    return s;
}

const PolyQ unit_square{{pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(1, 1, 1, 1), pt(0, 1, 1, 1)}};
const PolyQ center_square{
    {pt(1, 4, 1, 4), pt(3, 4, 1, 4), pt(3, 4, 3, 4), pt(1, 4, 3, 4)}};

}  // namespace

TEST_CASE("convex hull and containment predicates") {
    auto h = PolyQ::hull({pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(1, 1, 1, 1), pt(0, 1, 1, 1),
                          pt(1, 2, 1, 2), pt(1, 2, 0, 1)});  // interior + edge point dropped
    CHECK(h.size() == 4);
    CHECK(h.area2() == Rational(2));
    CHECK(h.strictly_contains(pt(1, 2, 1, 2)));
    CHECK(h.on_boundary(pt(1, 2, 0, 1)));
    CHECK(!h.contains(pt(2, 1, 0, 1)));
}

TEST_CASE("chart from slack-type square matrix") {
    Matrix<Rational> m = square_slack_matrix();
    auto ct = chart_from_matrix(m);
    CHECK(ct.W.size() == 4);
    CHECK(ct.V.size() == 4);
    for (auto& p : ct.V.vertices()) CHECK(ct.W.on_boundary(p));

    // column scaling leaves the normalized vertex set unchanged
    Matrix<Rational> scaled = m;
    Rational factors[4] = {Rational(2), Rational(1, 3), Rational(5), Rational(7, 2)};
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) scaled(i, j) *= factors[j];
    auto ct2 = chart_from_matrix(scaled);
    CHECK(ct2.columns == ct.columns);
}

TEST_CASE("chart errors and strict interiority") {
    Matrix<Rational> low(4, 4);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) low(i, j) = Rational(1 + i + j);  // rank 2
    CHECK_THROWS_WITH_AS(chart_from_matrix(low), doctest::Contains("RANK_ERROR"), GeometryError);

    Rng rng(31);
    Matrix<Rational> m = random_positive_product(4, 6, rng);
    if (m.rank() == 3) {
        auto ct = chart_from_matrix(m);
        for (auto& p : ct.V.vertices()) CHECK(ct.W.strictly_contains(p));
    }
}

TEST_CASE("vertex-anchored triangle golden values") {
    auto t = delta_w(unit_square, center_square, 0);  // anchored at (0,0)
    auto want = vertex_set({pt(0, 1, 0, 1), pt(1, 1, 1, 3), pt(1, 3, 1, 1)});
    CHECK(vertex_set(t.verts) == want);
    CHECK(t.inside_W);
    CHECK(!t.contains_V);  // (3/4, 3/4) lies beyond the chord x + y = 4/3

    // the four anchored triangles map onto each other under the symmetries
    auto t2 = delta_w(unit_square, center_square, 2);  // anchored at (1,1)
    auto want2 = vertex_set({pt(1, 1, 1, 1), pt(0, 1, 2, 3), pt(2, 3, 0, 1)});
    CHECK(vertex_set(t2.verts) == want2);
}

TEST_CASE("vertex anchor inside V is rejected") {
    CHECK_THROWS_WITH_AS(delta_w(unit_square, unit_square, 0),
                         doctest::Contains("INVALID_ANCHOR"), GeometryError);
}

TEST_CASE("edge-anchored triangle and the NONE case") {
    // wide flat V: the off-edge rays of the bottom edge meet above W
    PolyQ flat{{pt(1, 10, 1, 10), pt(9, 10, 1, 10), pt(9, 10, 5, 10), pt(1, 10, 5, 10)}};
    CHECK(!delta_e(unit_square, flat, 0).has_value());

    // the center square's edges also fail: rays from (0,1/4) and (1,1/4)
    // through the top corners meet at (1/2, 5/4), above W
    CHECK(!delta_e(unit_square, center_square, 0).has_value());

    // shallow trapezoid near the bottom edge: rays converge inside W
    PolyQ trap{{pt(1, 10, 1, 10), pt(9, 10, 1, 10), pt(6, 10, 2, 10), pt(4, 10, 2, 10)}};
    auto t = delta_e(unit_square, trap, 0);
    REQUIRE(t.has_value());
    CHECK(t->inside_W);
    CHECK(t->contains_V);
    // apex at (1/2, 9/40), on the two converging rays of slope +-1/4
    auto want = vertex_set({pt(0, 1, 1, 10), pt(1, 1, 1, 10), pt(1, 2, 9, 40)});
    CHECK(vertex_set(t->verts) == want);
}

TEST_CASE("candidate family of the square/center-square pair") {
    auto cands = candidate_triangles(unit_square, center_square);
    unsigned vertex_anchored = 0;
    for (auto& c : cands)
        if (c.provenance == TriangleProvenance::VertexAnchored) ++vertex_anchored;
    CHECK(vertex_anchored == 4);
    for (auto& c : cands) CHECK(!c.contains_V);  // nonnegative rank 4 configuration
}

TEST_CASE("triangle inner polygon is its own witness") {
    PolyQ tri{{pt(1, 4, 1, 4), pt(3, 4, 1, 4), pt(1, 2, 3, 4)}};
    Matrix<Rational> m = lift_points({tri.vertex(0), tri.vertex(1), tri.vertex(2),
                                      pt(1, 2, 1, 2)});
    auto res = nnrank_le3(m);
    CHECK(res.value);
    REQUIRE(res.factorization.has_value());
    CHECK(res.factorization->first * res.factorization->second == m);
}

TEST_CASE("nonnegative rank decision with certificates") {
    Rng rng(32);
    unsigned checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        unsigned m = 4 + rng.range(0, 2), n = 4 + rng.range(0, 3);
        Matrix<Rational> mat = random_positive_product(m, n, rng);
        auto res = nnrank_le3(mat);
        CHECK(res.value);
        if (res.rank_fast_path) continue;
        ++checked;
        REQUIRE(res.witness.has_value());
        REQUIRE(res.factorization.has_value());
        auto& [a, b] = *res.factorization;
        CHECK(a * b == mat);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (unsigned k = 0; k < 3; ++k) CHECK(a(i, k).sign() >= 0);
        for (unsigned k = 0; k < 3; ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) CHECK(b(k, j).sign() >= 0);
        // witness containment re-verified from scratch
        auto ct = chart_from_matrix(mat);
        auto tri = res.witness->polygon();
        CHECK(tri.contains_polygon(ct.V));
        CHECK(ct.W.contains_polygon(tri));
        // transposition consistency
        CHECK(nnrank_le3(mat.transpose()).value);
    }
    CHECK(checked >= 15);
}

TEST_CASE("slack square has nonnegative rank 4") {
    auto res = nnrank_le3(square_slack_matrix());
    CHECK(!res.value);
    CHECK(!res.reason.empty());

    // rank-1 fast path
    Matrix<Rational> ones(3, 3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) ones(i, j) = Rational(1 + i) * Rational(1 + j);
    auto r1 = nnrank_le3(ones);
    CHECK(r1.value);
    CHECK(r1.rank_fast_path);
}

TEST_CASE("scaling invariance of the rank decision") {
    Rng rng(33);
    Matrix<Rational> mat = random_positive_product(4, 5, rng);
    Matrix<Rational> scaled = mat;
    for (unsigned j = 0; j < 5; ++j) {
        Rational c = rng.positive_rational();
        for (unsigned i = 0; i < 4; ++i) scaled(i, j) *= c;
    }
    for (unsigned i = 0; i < 4; ++i) {
        Rational c = rng.positive_rational();
        for (unsigned j = 0; j < 5; ++j) scaled(i, j) *= c;
    }
    CHECK(nnrank_le3(mat).value == nnrank_le3(scaled).value);
}

TEST_CASE("rank-3 zero-entry inputs outside the special cases are refused") {
    // pentagon with one vertex on the square's boundary -> a zero entry
    Matrix<Rational> m = lift_points({pt(1, 2, 0, 1), pt(4, 5, 1, 4), pt(3, 4, 3, 4),
                                      pt(1, 4, 3, 4), pt(1, 5, 1, 4)});
    REQUIRE(m.rank() == 3);
    CHECK_THROWS_WITH_AS(nnrank_le3(m), doctest::Contains("REQUIRES_POSITIVE"), GeometryError);
}

TEST_CASE("boundary trichotomy") {
    Rng rng(34);
    // generic positive factorization: interior
    Matrix<Rational> mat = random_positive_product(4, 6, rng);
    REQUIRE(mat.rank() == 3);
    CHECK(boundary_test(mat).verdict == BoundaryVerdict::INTERIOR);

    // zero entry at rank <= 2: boundary
    Matrix<Rational> r2(3, 3);
    r2(0, 0) = Rational(1);
    r2(1, 1) = Rational(1);
    r2(0, 1) = Rational(1);
    CHECK(boundary_test(r2).verdict == BoundaryVerdict::BOUNDARY);

    // rank 3 with a zero entry but certified membership (triangular V):
    // boundary; outside the model (slack square, nonnegative rank 4):
    // NOT_IN_MODEL despite its zeros
    Matrix<Rational> tri3 = lift_points({pt(1, 2, 0, 1), pt(3, 4, 3, 4), pt(1, 4, 3, 4)});
    REQUIRE(tri3.rank() == 3);
    CHECK(boundary_test(tri3).verdict == BoundaryVerdict::BOUNDARY);
    CHECK(boundary_test(square_slack_matrix()).verdict == BoundaryVerdict::NOT_IN_MODEL);

    // octagon configurations: shallow slope -> V too large for any triangle,
    // steeper-than-pi/8 slope -> strictly interior
    CHECK(boundary_test(square_slope_matrix(Rational(1, 3))).verdict ==
          BoundaryVerdict::NOT_IN_MODEL);
    CHECK(boundary_test(square_slope_matrix(Rational(1, 2))).verdict ==
          BoundaryVerdict::INTERIOR);
}

TEST_CASE("square example over the quadratic extension") {
    auto ex = square_example(Rational(1, 100));
    CHECK(ex.angular.size() == 4);
    CHECK(ex.perpendicular.size() == 4);
    CHECK(ex.matrix.rows() == 4);
    CHECK(ex.matrix.cols() == 8);
    CHECK(ex.report.boundary_at_base);
    CHECK(ex.report.vprime_no_triangle);
    CHECK(ex.report.angular_deletions);
    CHECK(ex.report.perpendicular_deletions);
    CHECK(ex.report.tight_fits.size() == 4);
    CHECK(ex.report.pass());
    CHECK(ex.report.failures.empty());

    // boundary verdict straight from the emitted matrix
    CHECK(boundary_test(ex.matrix_unperturbed).verdict == BoundaryVerdict::BOUNDARY);
}

TEST_CASE("hexagonal wide-submatrix example") {
    auto ex = moitra_example(2, Rational(1, 1000));
    CHECK(ex.report.shapes_ok);
    CHECK(ex.report.no_triangle_contains_vprime);
    CHECK(ex.report.deltas_cover_all_but_edge_pairs);
    CHECK(ex.report.submatrix_spot_check);
    CHECK(ex.report.max_guaranteed_columns == 2);
    CHECK(ex.report.pass());
    CHECK(ex.matrix.rows() == 6);
    CHECK(ex.matrix.cols() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(ex.matrix(i, j).sign() > 0);

    // smaller eps keeps the rank >= 4 verdict (monotone in eps)
    auto tighter = moitra_example(2, Rational(1, 10000));
    CHECK(tighter.report.no_triangle_contains_vprime);

    // unperturbed combinatorics: delta_w(W, V, i) has vertices w_i, w_{i+n}, w_{i+2n}
    for (unsigned i = 0; i < 6; ++i) {
        auto t = delta_w(ex.W, ex.V, i);
        auto want = vertex_set({ex.W.vertex(i), ex.W.vertex(i + 2), ex.W.vertex(i + 4)});
        CHECK(vertex_set(t.verts) == want);
        CHECK(t.contains_V);
    }
    // and the distinct valid candidates number n = 2
    auto cands = candidate_triangles(ex.W, ex.V);
    unsigned valid = 0;
    for (auto& c : cands)
        if (c.valid()) ++valid;
    CHECK(valid == 2);
}

TEST_CASE("svg rendering is deterministic and complete") {
    auto ex = square_example(Rational(1, 100));
    auto cands = candidate_triangles(ex.W, ex.V);
    const std::string path = "test_render.svg";
    svg_render(ex.W, ex.V, cands, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string first = ss.str();

    std::size_t polys = 0;
    for (std::size_t p = first.find("<polygon"); p != std::string::npos;
         p = first.find("<polygon", p + 1))
        ++polys;
    CHECK(polys == 2 + cands.size());
    CHECK(cands.size() >= 4);

    svg_render(ex.W, ex.V, cands, path);
    std::ifstream in2(path, std::ios::binary);
    std::stringstream ss2;
    ss2 << in2.rdbuf();
    CHECK(ss2.str() == first);

    svg_render(ex.W, ex.V, {}, path);  // polygons only
    std::remove(path.c_str());
}
