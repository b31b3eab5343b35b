#pragma once

#include "nnr3/monomial.hpp"
#include "nnr3/rational.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nnr3 {

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

// Common row/column multidegree of an x-homogeneous polynomial.
struct MultiDegree {
    std::vector<unsigned> row_degrees;
    std::vector<unsigned> col_degrees;
    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    MultiDegree operator+(const MultiDegree& o) const;
    std::string str() const;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted descending
// under canonical grevlex, no zero coefficients stored; equality is
// structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational c) {
        if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
    }
    Polynomial(Rational c, Monomial m) {
        if (!c.is_zero()) terms_.push_back({std::move(m), std::move(c)});
    }

    static Polynomial variable(VarId v) { return Polynomial(Rational(1), Monomial::var(v)); }
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    // All variables occurring, ascending by id.
    std::vector<VarId> variables() const;
    bool uses_space(VarSpace s) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    // this * (c * m), fused for the division inner loop.
    Polynomial times_term(const Rational& c, const Monomial& m) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Leading term under an order (linear scan unless the order is the
    // canonical grevlex, in which case it is the first stored term).
    const Term& leading_term(const MonomialOrder& order) const;

    Polynomial monic(const MonomialOrder& order) const;

    template <class K>
    K evaluate(const std::function<K(VarId)>& point) const {
        K acc(0);
        for (auto& t : terms_) {
            K prod(detail_coeff_to<K>(t.coeff));
            for (auto& [v, e] : t.mono.factors()) {
                K val = point(v);
                for (unsigned i = 0; i < e; ++i) prod *= val;
            }
            acc += prod;
        }
        return acc;
    }

    Polynomial substitute(const std::function<Polynomial(VarId)>& image) const;

    // Common multidegree in the x-space grading, or nullopt when the terms
    // disagree (NOT_HOMOGENEOUS). Requires an x-space polynomial.
    std::optional<MultiDegree> multidegree(unsigned m, unsigned n) const;

    // a/b bidegree (total degree in a-variables, total degree in
    // b-variables), or nullopt if terms disagree.
    std::optional<std::pair<unsigned, unsigned>> ab_bidegree() const;

    std::string str(const MonomialOrder& order = MonomialOrder::grevlex()) const;
    nlohmann::json to_json() const;
    static Polynomial parse(const std::string& text);
    static Polynomial from_json(const nlohmann::json& j);

private:
    template <class K>
    static K detail_coeff_to(const Rational& r) {
        return K(r);
    }

    std::vector<Term> terms_;
};

template <>
inline Rational Polynomial::detail_coeff_to<Rational>(const Rational& r) { return r; }

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division: dividend = sum quotients[i]*divisors[i] + remainder,
// no remainder term divisible by any divisor leading term. Deterministic
// given the divisor order.
DivisionResult divide(const Polynomial& dividend, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);

// Exact quotient p = q*d, or nullopt when not divisible.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

}  // namespace nnr3
