#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nnr3/boundary.hpp"

#include <set>

using namespace nnr3;

namespace {

Matrix<Rational> random_matrix(unsigned r, unsigned c, Rng& rng) {
    Matrix<Rational> m(r, c);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < c; ++j) m(i, j) = rng.rational();
    return m;
}

// Evaluate the displayed sextic formula numerically, term by term, as an
// oracle independent of the polynomial-arithmetic construction.
Rational sextic_formula_at(const Matrix<Rational>& x) {
    auto e = [&](unsigned i, unsigned j) { return x(i - 1, j - 1); };
    Rational p1 = -e(1, 3) * e(2, 1) + e(1, 1) * e(2, 3);
    Rational p2 = e(1, 3) * e(2, 2) - e(1, 2) * e(2, 3);
    Rational p3 = -e(1, 2) * e(2, 1) + e(1, 1) * e(2, 2);
    Rational inner = p2 * e(3, 1) - p3 * e(3, 3);
    return p1 * p2 * e(3, 2) * e(4, 1) - p1 * inner * e(4, 2) + p3 * inner * e(4, 3);
}

std::vector<unsigned> a_row_degrees(const Polynomial& p) {
    std::vector<unsigned> deg;
    bool first = true;
    for (auto& t : p.terms()) {
        std::vector<unsigned> d(4, 0);
        for (auto& [v, e] : t.mono.factors())
            if (var_space(v) == VarSpace::A) d[var_row(v) - 1] += e;
        if (first) {
            deg = d;
            first = false;
        } else {
            REQUIRE(d == deg);
        }
    }
    return deg;
}

}  // namespace

TEST_CASE("explicit sextic matches its defining formula") {
    const Polynomial& f = base_sextic_f();
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Matrix<Rational> x = random_matrix(4, 3, rng);
        CHECK(evaluate_at_matrix(f, x) == sextic_formula_at(x));
    }
    auto md = f.multidegree(4, 3);
    REQUIRE(md.has_value());
    CHECK(md->row_degrees == std::vector<unsigned>{2, 2, 1, 1});
    CHECK(md->col_degrees == std::vector<unsigned>{2, 2, 2});
    CHECK(f.total_degree() == 6);
}

TEST_CASE("canonical sextic vanishes on patterned products, not generically") {
    const Polynomial& f = canonical_sextic_f();
    Rng rng(12);
    unsigned nonzero = 0;
    for (int t = 0; t < 20; ++t) {
        auto [a, b] = sample_patterned_pair(4, 3, rng);
        CHECK(evaluate_at_matrix(f, a * b) == Rational(0));
        if (evaluate_at_matrix(f, random_matrix(4, 3, rng)) != Rational(0)) ++nonzero;
    }
    CHECK(nonzero >= 18);  // generic points avoid the hypersurface
}

TEST_CASE("canonical sextic is the displayed one with columns shifted") {
    // canonical(M) = displayed(M with columns (2,3,1)); the displayed
    // sextic itself vanishes on the cyclically shifted zero pattern.
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        Matrix<Rational> x = random_matrix(4, 3, rng);
        Matrix<Rational> y(4, 3);
        unsigned shift[3] = {2, 3, 1};
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 3; ++j) y(i, j) = x(i, shift[j] - 1);
        CHECK(evaluate_at_matrix(canonical_sextic_f(), x) ==
              evaluate_at_matrix(base_sextic_f(), y));

        auto [a, b] = sample_patterned_pair(4, 3, rng);
        Matrix<Rational> bs(3, 3);  // shift the b-zeros to (1,3),(2,1),(3,2)
        for (unsigned k = 0; k < 3; ++k)
            for (unsigned j = 0; j < 3; ++j) bs(k, j) = b(k, (j + 1) % 3);
        CHECK(evaluate_at_matrix(base_sextic_f(), a * bs) == Rational(0));
    }
}

TEST_CASE("determinant factor D") {
    const Polynomial& d = det_D();
    CHECK(d.term_count() == 6);
    for (auto& t : d.terms()) CHECK((t.coeff == Rational(1) || t.coeff == Rational(-1)));

    // D is minus the determinant of b-columns (1,2,3).
    CHECK(d == -det3_B(ColumnTriple(1, 2, 3)));
    CHECK(aligned_det_B(ColumnTriple(1, 2, 3)) == d);

    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        Matrix<Rational> b = random_matrix(3, 3, rng);
        Rational dv = det_D().evaluate<Rational>(
            [&](VarId v) { return b(var_row(v) - 1, var_col(v) - 1); });
        CHECK(dv == -b.det());
    }
}

TEST_CASE("pullback of f factors as D times a (6,3) cofactor") {
    const Polynomial& f63 = compute_f63();
    REQUIRE(!f63.is_zero());
    CHECK(mu_pullback(canonical_sextic_f()) == det_D() * f63);
    // the displayed sextic factors over the same determinant
    auto displayed_cofactor = divide_exact(mu_pullback(base_sextic_f()), det_D());
    REQUIRE(displayed_cofactor.has_value());
    CHECK(!displayed_cofactor->is_zero());

    auto bi = f63.ab_bidegree();
    REQUIRE(bi.has_value());
    CHECK(bi->first == 6);
    CHECK(bi->second == 3);
    CHECK(a_row_degrees(f63) == std::vector<unsigned>{2, 2, 1, 1});

    // the cofactor vanishes on the patterned factor pairs
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        auto [a, b] = sample_patterned_pair(4, 3, rng);
        CHECK(evaluate_at_pair(f63, a, b) == Rational(0));
    }
}

TEST_CASE("4x4 minors") {
    Polynomial q = minor4x4({1, 2, 3, 4}, {1, 2, 3, 4});
    CHECK(q.term_count() == 24);
    Rng rng(14);
    for (int t = 0; t < 10; ++t) {
        Matrix<Rational> x = random_matrix(4, 4, rng);
        CHECK(evaluate_at_matrix(q, x) == x.det());
        auto [a, b] = sample_patterned_pair(4, 4, rng);
        CHECK(evaluate_at_matrix(q, a * b) == Rational(0));
    }
    // transpose duality of minors
    CHECK(transpose_x(minor4x4({1, 2, 3, 4}, {2, 3, 5, 6})) == minor4x4({2, 3, 5, 6}, {1, 2, 3, 4}));
}

TEST_CASE("canonical sextic for the base triple is the aligned f") {
    // Pins the sign convention: mu* f_{(1,2,3)} = f63 * D.
    CHECK(sextic_for_triple(ColumnTriple(1, 2, 3), 3) == canonical_sextic_f());
}

TEST_CASE("canonical sextics satisfy the defining pullback identity") {
    for (auto t : {ColumnTriple(1, 2, 4), ColumnTriple(4, 5, 6), ColumnTriple(2, 3, 6)}) {
        Polynomial s = sextic_for_triple(t, 6);
        CHECK(mu_pullback(s) == compute_f63() * aligned_det_B(t));
        auto md = s.multidegree(4, 6);
        REQUIRE(md.has_value());
        CHECK(md->row_degrees == std::vector<unsigned>{2, 2, 1, 1});
        std::vector<unsigned> want(6, 0);
        for (unsigned c : {1u, 2u, 3u}) ++want[c - 1];
        for (unsigned c : t.idx) ++want[c - 1];
        CHECK(md->col_degrees == want);
    }
}

TEST_CASE("orbit construction agrees with direct solves") {
    auto orbit6 = sextics_via_orbit(6);
    REQUIRE(orbit6.size() == 20);
    for (auto& [t, s] : orbit6) CHECK(s == sextic_for_triple(t, 6));

    auto orbit7 = sextics_via_orbit(7);
    REQUIRE(orbit7.size() == 35);
    std::set<ColumnTriple> seen;
    for (auto& [t, s] : orbit7) seen.insert(t);
    CHECK(seen.size() == 35);
    for (auto& [t, s] : orbit7) {
        if (t == ColumnTriple(1, 4, 7) || t == ColumnTriple(5, 6, 7) || t == ColumnTriple(2, 3, 7))
            CHECK(s == sextic_for_triple(t, 7));
        CHECK(mu_pullback(s) == compute_f63() * aligned_det_B(t));
    }
}

TEST_CASE("generator sets have the expected shape and vanish on the model") {
    GeneratorSet g46 = generators(4, 6);
    CHECK(g46.quartics.size() == 15);
    CHECK(g46.sextics.size() == 20);
    GeneratorSet g56 = generators(5, 6);
    CHECK(g56.quartics.size() == 75);
    CHECK(g56.sextics.size() == 20);
    GeneratorSet g47 = generators(4, 7);
    CHECK(g47.quartics.size() == 35);
    CHECK(g47.sextics.size() == 35);

    Rng rng(15);
    for (int t = 0; t < 5; ++t) {
        auto [a, b] = sample_patterned_pair(4, 6, rng);
        Matrix<Rational> x = a * b;
        for (auto& p : g46.all()) CHECK(evaluate_at_matrix(p, x) == Rational(0));
    }
    // ... and not on a generic matrix.
    Matrix<Rational> y = random_matrix(4, 6, rng);
    unsigned nonzero = 0;
    for (auto& p : g46.all())
        if (evaluate_at_matrix(p, y) != Rational(0)) ++nonzero;
    CHECK(nonzero == g46.all().size());
}

TEST_CASE("GL3 equivariance of the cofactor and invariance of the pullback") {
    Rng rng(16);
    Matrix<Rational> diag = Matrix<Rational>::identity(3);
    diag(0, 0) = Rational(2);
    auto rep1 = check_gl3_equivariance(diag, 8, rng);
    CHECK(rep1.pass());

    // a determinant-one shear
    Matrix<Rational> shear = Matrix<Rational>::identity(3);
    shear(0, 1) = Rational(3, 7);
    auto rep2 = check_gl3_equivariance(shear, 8, rng);
    CHECK(rep2.pass());

    // a random invertible matrix
    Matrix<Rational> g(3, 3);
    do {
        g = random_matrix(3, 3, rng);
    } while (g.det().is_zero());
    auto rep3 = check_gl3_equivariance(g, 8, rng);
    CHECK(rep3.pass());
}

TEST_CASE("scaling factor is exactly det(g)") {
    // f63(A g, g^-1 B) = det(g) f63(A, B): check the factor is not absorbed
    // by symmetry, using g = diag(2,1,1) at a specific point.
    Rng rng(17);
    Matrix<Rational> a = random_matrix(4, 3, rng), b = random_matrix(3, 3, rng);
    Matrix<Rational> g = Matrix<Rational>::identity(3);
    g(0, 0) = Rational(2);
    Matrix<Rational> ginv = Matrix<Rational>::identity(3);
    ginv(0, 0) = Rational(1, 2);
    Rational lhs = evaluate_at_pair(compute_f63(), a * g, ginv * b);
    Rational rhs = evaluate_at_pair(compute_f63(), a, b);
    CHECK(lhs == Rational(2) * rhs);
    CHECK(lhs != rhs);
}

TEST_CASE("parametrization dimension") {
    Rng rng(18);
    auto r46 = dimension_check(4, 6, 3, rng);
    CHECK(r46.expected == 20);
    CHECK(r46.pass());
    auto r43 = dimension_check(4, 3, 3, rng);
    CHECK(r43.expected == 11);
    CHECK(r43.pass());
    auto r57 = dimension_check(5, 7, 2, rng);
    CHECK(r57.expected == 26);
    CHECK(r57.pass());
}

TEST_CASE("minimality of the generating set") {
    auto rep = minimality_check(4, 6);
    CHECK(rep.quartic_count == 15);
    CHECK(rep.quartic_rank == 15);
    CHECK(rep.sextic_failures.empty());
    CHECK(rep.pass());

    // degenerate sanity checks for the span test itself
    Polynomial q = minor4x4({1, 2, 3, 4}, {1, 2, 4, 5});
    CHECK(in_quartic_span(q, 4, 6, {}));
    Polynomial s = sextic_for_triple(ColumnTriple(1, 2, 4), 6);
    CHECK(!in_quartic_span(s, 4, 6, {}));
    CHECK(in_quartic_span(s, 4, 6, {s}));
}

TEST_CASE("component count") {
    CHECK(component_count(3, 3) == 9);
    CHECK(component_count(4, 4) == 304);
    CHECK(component_count(4, 6) == 2904);
    CHECK(component_count(5, 5) == mpz_class(25 + 36 * (10 * 5 + 5 * 10)));
    // symmetry in m and n
    for (unsigned m = 3; m <= 7; ++m)
        for (unsigned n = 3; n <= 7; ++n) CHECK(component_count(m, n) == component_count(n, m));
}

TEST_CASE("groebner verification of a small case") {
    EngineOptions opts;
    opts.threads = 4;
    auto rep = verify_gb(4, 4, opts);
    CHECK(!rep.aborted);
    CHECK(rep.groebner_pass);
    CHECK(rep.reduced_equality_pass);
}
