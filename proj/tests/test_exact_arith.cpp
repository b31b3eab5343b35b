#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nnr3/matrix.hpp"
#include "nnr3/matrix_io.hpp"
#include "nnr3/quadext.hpp"
#include "nnr3/rational.hpp"

#include <gmpxx.h>

#include <random>
#include <sstream>

using namespace nnr3;

namespace {

std::mt19937_64 rng(20240917);

long rnd_int(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational rnd_rat() {
    return Rational(rnd_int(-100, 100), rnd_int(1, 100));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(1, -2).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse(" -14 / 21 ") == Rational(-2, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("rational field axioms on random samples") {
    for (int t = 0; t < 200; ++t) {
        Rational a = rnd_rat(), b = rnd_rat(), c = rnd_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    }
}

TEST_CASE("quadratic extension arithmetic") {
    // (1+sqrt2)(1-sqrt2) = -1
    Quad2 u(Rational(1), Rational(1));
    Quad2 v(Rational(1), Rational(-1));
    CHECK(u * v == Quad2(Rational(-1)));
    // sign(1 - sqrt2) = -1
    CHECK(v.sign() == -1);
    CHECK(u.sign() == 1);
    CHECK(Quad2(Rational(0)).sign() == 0);
    CHECK((u / u) == Quad2(Rational(1)));
    CHECK(u.inv() * u == Quad2(Rational(1)));

    // tan(pi/8) = sqrt2 - 1 is positive and below 1/2
    Quad2 t8(Rational(-1), Rational(1));
    CHECK(t8.sign() == 1);
    CHECK((t8 - Quad2(Rational(1, 2))).sign() == -1);
}

TEST_CASE("quadratic sign agrees with high-precision decimal evaluation") {
    // 100-digit float comparison via GMP, 1000 random samples.
    mpf_set_default_prec(400);
    mpf_class root2;
    mpf_sqrt_ui(root2.get_mpf_t(), 2);
    for (int t = 0; t < 1000; ++t) {
        Rational a = rnd_rat(), b = rnd_rat();
        Quad2 q(a, b);
        mpf_class val = mpf_class(mpq_class(a.num(), a.den())) +
                        mpf_class(mpq_class(b.num(), b.den())) * root2;
        int fsign = sgn(val);
        CHECK(q.sign() == fsign);
    }
}

TEST_CASE("quadext parse/str round trip") {
    Quad2 q(Rational(-1, 2), Rational(3, 7));
    CHECK(Quad2::parse(q.str()) == q);
    CHECK(Quad2::parse("sqrt(2)") == Quad2::sqrt_d());
    CHECK(Quad2::parse("-sqrt(2)") == -Quad2::sqrt_d());
    CHECK(Quad2::parse("3/4") == Quad2(Rational(3, 4)));
    CHECK(Quad2::parse("1/2-1/3*sqrt(2)") == Quad2(Rational(1, 2), Rational(-1, 3)));
    CHECK_THROWS(Quad2::parse("1+sqrt(3)"));
}

TEST_CASE("matrix rank") {
    CHECK(Matrix<Rational>::identity(3).rank() == 3);
    Matrix<Rational> ones(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) ones(i, j) = Rational(1);
    CHECK(ones.rank() == 1);

    // random positive 5x3 times 3x6 has rank exactly 3
    for (int t = 0; t < 10; ++t) {
        Matrix<Rational> a(5, 3), b(3, 6);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t k = 0; k < 3; ++k) a(i, k) = Rational(rnd_int(1, 100), rnd_int(1, 100));
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t j = 0; j < 6; ++j) b(k, j) = Rational(rnd_int(1, 100), rnd_int(1, 100));
        Matrix<Rational> m = a * b;
        if (a.rank() == 3 && b.rank() == 3) CHECK(m.rank() == 3);
        CHECK(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("solve_linear") {
    Matrix<Rational> id2 = Matrix<Rational>::identity(2);
    auto x = id2.solve({Rational(3), Rational(4)});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Rational>{Rational(3), Rational(4)});

    // [[1,1]] x = (2) -> (2, 0) under the zero-free-variable rule
    Matrix<Rational> a(1, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(1);
    auto y = a.solve({Rational(2)});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<Rational>{Rational(2), Rational(0)});

    // inconsistent
    Matrix<Rational> c(2, 1);
    c(0, 0) = Rational(1);
    c(1, 0) = Rational(1);
    CHECK_FALSE(c.solve({Rational(0), Rational(1)}).has_value());
}

TEST_CASE("solve on random consistent systems reproduces rhs") {
    for (int t = 0; t < 30; ++t) {
        std::size_t m = 2 + rng() % 4, n = 2 + rng() % 4;
        Matrix<Rational> a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rnd_rat();
        std::vector<Rational> x0(n);
        for (auto& v : x0) v = rnd_rat();
        auto b = a.apply(x0);
        auto x = a.solve(b);
        REQUIRE(x.has_value());
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("nullspace") {
    CHECK(Matrix<Rational>::identity(3).nullspace().empty());

    Matrix<Rational> a(1, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(1);
    auto ns = a.nullspace();
    REQUIRE(ns.size() == 1);
    // (1,-1) up to scaling
    CHECK(ns[0][0] * Rational(-1) == ns[0][1]);

    // 2x4 random rank-2: two basis vectors, each in the kernel
    for (int t = 0; t < 10; ++t) {
        Matrix<Rational> m(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = rnd_rat();
        if (m.rank() != 2) continue;
        auto basis = m.nullspace();
        CHECK(basis.size() == 2);
        for (auto& v : basis) {
            auto y = m.apply(v);
            for (auto& e : y) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("matrix json round trip is bit exact") {
    Matrix<Rational> m(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = rnd_rat();
    auto j = matrix_to_json(m);
    CHECK(matrix_from_json<Rational>(j) == m);
    CHECK(matrix_to_json(matrix_from_json<Rational>(j)) == j);

    Matrix<Quad2> q(2, 2);
    q(0, 0) = Quad2(Rational(1, 2), Rational(-1, 3));
    q(0, 1) = Quad2::sqrt_d();
    q(1, 0) = Quad2(Rational(0));
    q(1, 1) = Quad2(Rational(5));
    auto jq = matrix_to_json(q);
    CHECK(matrix_json_has_sqrt(jq));
    CHECK(matrix_from_json<Quad2>(jq) == q);
}

TEST_CASE("matrix csv round trip") {
    Matrix<Rational> m(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = rnd_rat();
    std::stringstream ss;
    matrix_to_csv(m, ss);
    CHECK(matrix_from_csv(ss) == m);
}

TEST_CASE("rational approximation by bounded denominator") {
    Rational pi = approx_rational(3.14159265358979, 1000);
    CHECK(pi == Rational(355, 113));
    Rational half = approx_rational(0.5, 10);
    CHECK(half == Rational(1, 2));
    Rational neg = approx_rational(-0.25, 100);
    CHECK(neg == Rational(-1, 4));
    CHECK(approx_rational(0.0, 10) == Rational(0));
}
