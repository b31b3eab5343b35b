#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnr3 {

// Variables live in three named spaces: x_{ij} on the m x n matrix,
// a_{ik} on the m x 3 left factor, b_{kj} on the 3 x n right factor.
// The canonical total order is x before a before b, row-major within a
// space, with x_{11} the largest variable overall. Encoding variables so
// that smaller id == larger variable makes that order a plain integer
// compare.
enum class VarSpace : std::uint8_t { X = 0, A = 1, B = 2 };

using VarId = std::uint32_t;

inline VarId make_var(VarSpace s, unsigned row, unsigned col) {
    if (row == 0 || col == 0 || row > 0xffff || col > 0xff)
        throw std::out_of_range("make_var: index out of range");
    return (static_cast<VarId>(s) << 24) | (static_cast<VarId>(row) << 8) | col;
}

inline VarId xvar(unsigned i, unsigned j) { return make_var(VarSpace::X, i, j); }
inline VarId avar(unsigned i, unsigned k) { return make_var(VarSpace::A, i, k); }
inline VarId bvar(unsigned k, unsigned j) { return make_var(VarSpace::B, k, j); }

inline VarSpace var_space(VarId v) { return static_cast<VarSpace>(v >> 24); }
inline unsigned var_row(VarId v) { return (v >> 8) & 0xffff; }
inline unsigned var_col(VarId v) { return v & 0xff; }

std::string var_name(VarId v);
VarId parse_var(const std::string& name);

// Sparse monomial: exponents keyed by variable id, ids strictly increasing
// (i.e. variables stored from largest to smallest in the canonical order).
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarId v, unsigned exp = 1) {
        Monomial m;
        if (exp > 0) m.e_.push_back({v, exp});
        return m;
    }

    const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return e_; }
    bool is_one() const { return e_.empty(); }
    unsigned degree() const {
        unsigned d = 0;
        for (auto& [v, e] : e_) d += e;
        return d;
    }
    unsigned exponent(VarId v) const {
        for (auto& [w, e] : e_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Quotient, valid only when *this divides o is reversed: o = (*this) * result
    // requires o.divides(*this) ... callers use a / b with b.divides(a).
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& u, const Monomial& v);
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial& u, const Monomial& v) { return u.e_ == v.e_; }
    friend bool operator!=(const Monomial& u, const Monomial& v) { return !(u.e_ == v.e_); }

    std::string str() const;

    // Building block for constructors: multiply in one variable power.
    Monomial& mul_var(VarId v, unsigned exp);

private:
    std::vector<std::pair<VarId, std::uint32_t>> e_;
};

// Monomial orders over the canonical variable order.
//   grevlex: total degree first, ties by reverse lexicographic (the term
//            with the smaller exponent on the least variable wins).
//   lex:     lexicographic on exponents, largest variable first.
//   block:   eliminate the given variable block first (grevlex within the
//            block, ties by grevlex on the remaining variables).
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Block };
    Kind kind = Kind::Grevlex;
    std::vector<VarId> first_block;  // Block only; sorted ascending

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder block(std::vector<VarId> block_vars);

    // -1, 0, +1 for u < v, u == v, u > v.
    int compare(const Monomial& u, const Monomial& v) const;

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }
};

// std::map comparator wrapping a runtime order.
struct MonomialLess {
    const MonomialOrder* order;
    bool operator()(const Monomial& u, const Monomial& v) const { return order->less(u, v); }
};

}  // namespace nnr3
