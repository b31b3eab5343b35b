#include "nnr3/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nnr3 {

namespace {
const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

bool canonical_greater(const Monomial& u, const Monomial& v) {
    return canonical_order().greater(u, v);
}
}  // namespace

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
    MultiDegree r = *this;
    r.row_degrees.resize(std::max(row_degrees.size(), o.row_degrees.size()), 0);
    r.col_degrees.resize(std::max(col_degrees.size(), o.col_degrees.size()), 0);
    for (std::size_t i = 0; i < o.row_degrees.size(); ++i) r.row_degrees[i] += o.row_degrees[i];
    for (std::size_t j = 0; j < o.col_degrees.size(); ++j) r.col_degrees[j] += o.col_degrees[j];
    return r;
}

std::string MultiDegree::str() const {
    auto vec = [](const std::vector<unsigned>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    return "rows " + vec(row_degrees) + " cols " + vec(col_degrees);
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return canonical_greater(a.mono, b.mono); });
    Polynomial p;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return p;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vs;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mono.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool Polynomial::uses_space(VarSpace s) const {
    for (auto& t : terms_)
        for (auto& [v, e] : t.mono.factors())
            if (var_space(v) == s) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// Merge of two canonically sorted term lists.
static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                     bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && canonical_greater(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || canonical_greater(b[j].mono, a[i].mono)) {
            out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    return r += b;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    return r -= b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<Monomial, Rational, MonomialLess> acc{MonomialLess{&canonical_order()}};
    for (auto& ta : a.terms_)
        for (auto& tb : b.terms_) {
            Monomial m = ta.mono * tb.mono;
            Rational c = ta.coeff * tb.coeff;
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    Polynomial r;
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return {};
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying by a fixed monomial preserves the grevlex order of terms.
    return r;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    if (order.kind == MonomialOrder::Kind::Grevlex) return terms_.front();
    const Term* best = &terms_.front();
    for (auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return {};
    return scaled(leading_term(order).coeff.inv());
}

Polynomial Polynomial::substitute(const std::function<Polynomial(VarId)>& image) const {
    Polynomial acc;
    for (auto& t : terms_) {
        Polynomial prod(t.coeff);
        for (auto& [v, e] : t.mono.factors()) {
            Polynomial img = image(v);
            for (unsigned i = 0; i < e; ++i) prod = prod * img;
        }
        acc += prod;
    }
    return acc;
}

std::optional<MultiDegree> Polynomial::multidegree(unsigned m, unsigned n) const {
    if (is_zero()) return MultiDegree{std::vector<unsigned>(m, 0), std::vector<unsigned>(n, 0)};
    std::optional<MultiDegree> common;
    for (auto& t : terms_) {
        MultiDegree d{std::vector<unsigned>(m, 0), std::vector<unsigned>(n, 0)};
        for (auto& [v, e] : t.mono.factors()) {
            if (var_space(v) != VarSpace::X)
                throw std::domain_error("multidegree: polynomial not in x-space");
            if (var_row(v) > m || var_col(v) > n)
                throw std::out_of_range("multidegree: variable outside the m x n grid");
            d.row_degrees[var_row(v) - 1] += e;
            d.col_degrees[var_col(v) - 1] += e;
        }
        if (!common) common = std::move(d);
        else if (!(*common == d)) return std::nullopt;
    }
    return common;
}

std::optional<std::pair<unsigned, unsigned>> Polynomial::ab_bidegree() const {
    std::optional<std::pair<unsigned, unsigned>> common;
    for (auto& t : terms_) {
        unsigned da = 0, db = 0;
        for (auto& [v, e] : t.mono.factors()) {
            if (var_space(v) == VarSpace::A) da += e;
            else if (var_space(v) == VarSpace::B) db += e;
        }
        if (!common) common = {da, db};
        else if (*common != std::pair{da, db}) return std::nullopt;
    }
    return common;
}

std::string Polynomial::str(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (auto& t : terms_) sorted.push_back(&t);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
        return order.greater(a->mono, b->mono);
    });
    std::string s;
    for (auto* t : sorted) {
        Rational c = t->coeff;
        if (s.empty()) {
            if (c.sign() < 0) {
                s += "- ";
                c = -c;
            }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (t->mono.is_one()) s += c.str();
        else if (c.is_one()) s += t->mono.str();
        else s += c.str() + "*" + t->mono.str();
    }
    return s;
}

nlohmann::json Polynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& t : terms_) {
        nlohmann::json mono = nlohmann::json::array();
        for (auto& [v, e] : t.mono.factors())
            mono.push_back({var_name(v), e});
        terms.push_back({{"coeff", t.coeff.str()}, {"monomial", std::move(mono)}});
    }
    return {{"terms", std::move(terms)}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
    std::vector<Term> ts;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& f : t.at("monomial"))
            m.mul_var(parse_var(f[0].get<std::string>()), f[1].get<unsigned>());
        ts.push_back({std::move(m), Rational::parse(t.at("coeff").get<std::string>())});
    }
    return from_terms(std::move(ts));
}

// Text grammar: term (('+'|'-') term)*, term = factor ('*' factor)*,
// factor = rational | variable ['^' exponent] | '(' polynomial ')'.
namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    Polynomial parse_poly() {
        Polynomial p;
        bool neg = eat('-');
        if (!neg) eat('+');
        p = parse_term();
        if (neg) p = -p;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++i;
                Polynomial t = parse_term();
                if (c == '-') p -= t;
                else p += t;
            } else break;
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_factor() {
        skip();
        if (i >= s.size()) throw std::invalid_argument("Polynomial::parse: unexpected end");
        char c = s[i];
        if (c == '(') {
            ++i;
            Polynomial p = parse_poly();
            if (!eat(')')) throw std::invalid_argument("Polynomial::parse: missing ')'");
            return apply_power(std::move(p));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            return Polynomial(Rational::parse(s.substr(start, i - start)));
        }
        if (c == 'x' || c == 'a' || c == 'b') {
            std::size_t start = i;
            while (i < s.size() && s[i] != ']') ++i;
            if (i >= s.size()) throw std::invalid_argument("Polynomial::parse: bad variable");
            ++i;
            VarId v = parse_var(s.substr(start, i - start));
            return apply_power(Polynomial::variable(v));
        }
        throw std::invalid_argument(std::string("Polynomial::parse: unexpected '") + c + "'");
    }

    Polynomial apply_power(Polynomial base) {
        if (!eat('^')) return base;
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("Polynomial::parse: missing exponent");
        unsigned e = std::stoul(s.substr(start, i - start));
        Polynomial p(Rational(1));
        for (unsigned k = 0; k < e; ++k) p = p * base;
        return p;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p{text};
    Polynomial r = p.parse_poly();
    p.skip();
    if (p.i != text.size())
        throw std::invalid_argument("Polynomial::parse: trailing input at offset " +
                                    std::to_string(p.i));
    return r;
}

DivisionResult divide(const Polynomial& dividend, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
    for (auto& d : divisors)
        if (d.is_zero()) throw std::domain_error("divide: zero divisor");

    struct Lead {
        Monomial mono;
        Rational coeff;
    };
    std::vector<Lead> leads;
    leads.reserve(divisors.size());
    for (auto& d : divisors) {
        const Term& lt = d.leading_term(order);
        leads.push_back({lt.mono, lt.coeff});
    }

    // Working dividend held in an order-aware map; leading term = rbegin.
    std::map<Monomial, Rational, MonomialLess> h{MonomialLess{&order}};
    for (auto& t : dividend.terms()) h[t.mono] = t.coeff;

    std::vector<Polynomial> quotients(divisors.size());
    std::vector<Term> remainder;
    while (!h.empty()) {
        auto lead = std::prev(h.end());
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (!leads[k].mono.divides(lead->first)) continue;
            Monomial q = lead->first / leads[k].mono;
            Rational c = lead->second / leads[k].coeff;
            quotients[k] += Polynomial(c, q);
            for (auto& t : divisors[k].terms()) {
                Monomial m = t.mono * q;
                Rational delta = t.coeff * c;
                auto [it, fresh] = h.try_emplace(std::move(m), Rational(0));
                it->second -= delta;
                if (it->second.is_zero()) h.erase(it);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back({lead->first, lead->second});
            h.erase(lead);
        }
    }
    return {std::move(quotients), Polynomial::from_terms(std::move(remainder))};
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    auto [q, r] = divide(p, {d}, MonomialOrder::grevlex());
    if (!r.is_zero()) return std::nullopt;
    return q[0];
}

}  // namespace nnr3
