#include "nnr3/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace nnr3 {

Rational Rational::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(t)));
        }
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: bad input '" + s + "'");
    }
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational approx_rational(double x, unsigned long max_den) {
    if (max_den == 0) throw std::invalid_argument("approx_rational: max_den must be positive");
    bool neg = x < 0;
    double y = std::fabs(x);
    // Continued fraction expansion; p/q track the current convergent.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = y;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        mpz_class a(static_cast<unsigned long>(fl));
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Best semiconvergent still within the denominator bound.
            mpz_class k = (mpz_class(max_den) - q0) / q1;
            mpz_class ps = k * p1 + p0;
            mpz_class qs = k * q1 + q0;
            mpq_class semi(ps, qs), conv(p1, q1);
            semi.canonicalize();
            conv.canonicalize();
            double es = std::fabs(semi.get_d() - y);
            double ec = std::fabs(conv.get_d() - y);
            mpq_class best = (q1 > 0 && ec <= es) ? conv : semi;
            return neg ? Rational(mpq_class(-best)) : Rational(best);
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    mpq_class q(p1, q1);
    q.canonicalize();
    return neg ? Rational(mpq_class(-q)) : Rational(q);
}

}  // namespace nnr3
