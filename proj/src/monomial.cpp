#include "nnr3/monomial.hpp"

#include <algorithm>

namespace nnr3 {

std::string var_name(VarId v) {
    static const char* names[] = {"x", "a", "b"};
    return std::string(names[static_cast<int>(var_space(v))]) + "[" +
           std::to_string(var_row(v)) + "," + std::to_string(var_col(v)) + "]";
}

VarId parse_var(const std::string& name) {
    auto lb = name.find('[');
    auto comma = name.find(',', lb);
    auto rb = name.find(']', comma);
    if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos)
        throw std::invalid_argument("parse_var: bad variable '" + name + "'");
    std::string sp = name.substr(0, lb);
    VarSpace s;
    if (sp == "x") s = VarSpace::X;
    else if (sp == "a") s = VarSpace::A;
    else if (sp == "b") s = VarSpace::B;
    else throw std::invalid_argument("parse_var: unknown space '" + sp + "'");
    unsigned row = std::stoul(name.substr(lb + 1, comma - lb - 1));
    unsigned col = std::stoul(name.substr(comma + 1, rb - comma - 1));
    return make_var(s, row, col);
}

Monomial& Monomial::mul_var(VarId v, unsigned exp) {
    if (exp == 0) return *this;
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const auto& p, VarId w) { return p.first < w; });
    if (it != e_.end() && it->first == v) it->second += exp;
    else e_.insert(it, {v, exp});
    return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto i = e_.begin(), j = o.e_.begin();
    while (i != e_.end() || j != o.e_.end()) {
        if (j == o.e_.end() || (i != e_.end() && i->first < j->first)) r.e_.push_back(*i++);
        else if (i == e_.end() || j->first < i->first) r.e_.push_back(*j++);
        else {
            r.e_.push_back({i->first, i->second + j->second});
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto j = o.e_.begin();
    for (auto& [v, e] : e_) {
        while (j != o.e_.end() && j->first < v) ++j;
        if (j == o.e_.end() || j->first != v || j->second < e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    // Requires o | *this.
    Monomial r;
    auto j = o.e_.begin();
    for (auto& [v, e] : e_) {
        unsigned sub = 0;
        while (j != o.e_.end() && j->first < v) ++j;
        if (j != o.e_.end() && j->first == v) sub = j->second;
        if (sub > e) throw std::domain_error("Monomial: not divisible");
        if (e > sub) r.e_.push_back({v, e - sub});
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& u, const Monomial& v) {
    Monomial r;
    auto i = u.e_.begin(), j = v.e_.begin();
    while (i != u.e_.end() || j != v.e_.end()) {
        if (j == v.e_.end() || (i != u.e_.end() && i->first < j->first)) r.e_.push_back(*i++);
        else if (i == u.e_.end() || j->first < i->first) r.e_.push_back(*j++);
        else {
            r.e_.push_back({i->first, std::max(i->second, j->second)});
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto i = e_.begin();
    auto j = o.e_.begin();
    while (i != e_.end() && j != o.e_.end()) {
        if (i->first == j->first) return false;
        if (i->first < j->first) ++i;
        else ++j;
    }
    return true;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (auto& [v, e] : e_) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

MonomialOrder MonomialOrder::block(std::vector<VarId> block_vars) {
    std::sort(block_vars.begin(), block_vars.end());
    return {Kind::Block, std::move(block_vars)};
}

namespace {

// Graded reverse lexicographic compare on sparse exponent lists. Higher
// total degree wins; on equal degree, scan variables from the smallest
// (largest id) upward and the first difference decides: the monomial with
// the smaller exponent there is the larger one.
int grevlex_cmp(const std::vector<std::pair<VarId, std::uint32_t>>& u,
                const std::vector<std::pair<VarId, std::uint32_t>>& v) {
    unsigned du = 0, dv = 0;
    for (auto& [_, e] : u) du += e;
    for (auto& [_, e] : v) dv += e;
    if (du != dv) return du < dv ? -1 : 1;
    auto i = u.rbegin();
    auto j = v.rbegin();
    while (i != u.rend() || j != v.rend()) {
        if (j == v.rend() || (i != u.rend() && i->first > j->first)) {
            // u has a positive exponent on a smaller variable than v does.
            return -1;
        }
        if (i == u.rend() || j->first > i->first) return 1;
        if (i->second != j->second) return i->second < j->second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

int lex_cmp(const std::vector<std::pair<VarId, std::uint32_t>>& u,
            const std::vector<std::pair<VarId, std::uint32_t>>& v) {
    auto i = u.begin();
    auto j = v.begin();
    while (i != u.end() || j != v.end()) {
        if (j == v.end() || (i != u.end() && i->first < j->first)) return 1;
        if (i == u.end() || j->first < i->first) return -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
    switch (kind) {
        case Kind::Grevlex:
            return grevlex_cmp(u.factors(), v.factors());
        case Kind::Lex:
            return lex_cmp(u.factors(), v.factors());
        case Kind::Block: {
            auto split = [&](const Monomial& m) {
                std::vector<std::pair<VarId, std::uint32_t>> in, out;
                for (auto& f : m.factors()) {
                    if (std::binary_search(first_block.begin(), first_block.end(), f.first))
                        in.push_back(f);
                    else
                        out.push_back(f);
                }
                return std::pair{in, out};
            };
            auto [ui, uo] = split(u);
            auto [vi, vo] = split(v);
            if (int c = grevlex_cmp(ui, vi)) return c;
            return grevlex_cmp(uo, vo);
        }
    }
    return 0;
}

}  // namespace nnr3
