#pragma once

#include "nnr3/rational.hpp"

#include <stdexcept>
#include <string>

namespace nnr3 {

// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
// D is a square-free positive integer fixed per computation context;
// the sign of a value is decided by exact rational case analysis.
template <int D>
class QuadExt {
    static_assert(D > 1, "QuadExt: D must be a square-free integer > 1");

public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt_d() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& rat() const { return a_; }
    const Rational& irr() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        Rational na = a_ * o.a_ + Rational(D) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Exact sign of a + b*sqrt(D): compare a^2 against D*b^2 when the two
    // parts pull in opposite directions.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        int cmp = (a_ * a_ - Rational(D) * b_ * b_).sign();
        return cmp == 0 ? 0 : cmp * sa;
    }

    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    QuadExt conj() const { return QuadExt(a_, -b_); }

    QuadExt inv() const {
        Rational norm = a_ * a_ - Rational(D) * b_ * b_;
        if (norm.is_zero()) {
            if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
            // Norm zero with nonzero value cannot happen for square-free D.
            throw std::logic_error("QuadExt: degenerate norm");
        }
        return QuadExt(a_ / norm, -b_ / norm);
    }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    // "a", "b*sqrt(D)", or "a+b*sqrt(D)" with rational a, b.
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string irr_part = b_.str() + "*sqrt(" + std::to_string(D) + ")";
        if (a_.is_zero()) return irr_part;
        return a_.str() + (b_.sign() > 0 ? "+" : "") + irr_part;
    }

    double to_double() const;

    static QuadExt parse(const std::string& s);

private:
    Rational a_, b_;
};

template <int D>
double QuadExt<D>::to_double() const {
    double root = D == 2 ? 1.4142135623730951 : __builtin_sqrt(static_cast<double>(D));
    return a_.to_double() + b_.to_double() * root;
}

template <int D>
QuadExt<D> QuadExt<D>::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto pos = t.find("sqrt(");
    if (pos == std::string::npos) return QuadExt(Rational::parse(t));
    auto close = t.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("QuadExt::parse: bad input '" + s + "'");
    if (std::stoi(t.substr(pos + 5, close - pos - 5)) != D)
        throw std::invalid_argument("QuadExt::parse: wrong radicand in '" + s + "'");
    // Split off the irrational term "b*sqrt(D)"; what precedes its sign is a.
    std::string head = t.substr(0, pos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // Find the + or - separating a from b (not a leading sign, not inside b).
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
            split = i;
            break;
        }
    }
    Rational a, b;
    if (split == std::string::npos) {
        std::string bs = head;
        if (bs.empty() || bs == "+") bs = "1";
        else if (bs == "-") bs = "-1";
        b = Rational::parse(bs);
    } else {
        a = Rational::parse(head.substr(0, split));
        std::string bs = head.substr(split);
        if (bs == "+") bs = "1";
        else if (bs == "-") bs = "-1";
        b = Rational::parse(bs);
    }
    return QuadExt(a, b);
}

using Quad2 = QuadExt<2>;

}  // namespace nnr3
