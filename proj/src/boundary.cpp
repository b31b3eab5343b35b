#include "nnr3/boundary.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nnr3 {

namespace {

Polynomial X(unsigned i, unsigned j) { return Polynomial::variable(xvar(i, j)); }

std::vector<std::vector<unsigned>> subsets_of_size(unsigned n, unsigned k, unsigned lo = 1) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (unsigned v = next; v + (k - cur.size()) <= n + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    return out;
}

mpz_class binom(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- patterns

ZeroPattern ZeroPattern::canonical(unsigned m, unsigned n) {
    if (m < 4 || n < 3) throw std::invalid_argument("ZeroPattern: need m >= 4, n >= 3");
    ZeroPattern p;
    p.m = m;
    p.n = n;
    p.a_zeros = {{1, 1}, {2, 1}, {3, 2}, {4, 3}};
    p.b_zeros = {{1, 1}, {2, 2}, {3, 3}};
    return p;
}

bool ZeroPattern::a_is_zero(unsigned i, unsigned k) const {
    return std::find(a_zeros.begin(), a_zeros.end(), std::pair{i, k}) != a_zeros.end();
}

bool ZeroPattern::b_is_zero(unsigned k, unsigned j) const {
    return std::find(b_zeros.begin(), b_zeros.end(), std::pair{k, j}) != b_zeros.end();
}

ColumnTriple::ColumnTriple(unsigned i, unsigned j, unsigned k) : idx{i, j, k} {
    std::sort(idx.begin(), idx.end());
    if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == 0)
        throw std::invalid_argument("ColumnTriple: indices must be distinct and positive");
}

std::string ColumnTriple::str() const {
    return std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]);
}

std::vector<Polynomial> GeneratorSet::all() const {
    std::vector<Polynomial> out;
    out.reserve(quartics.size() + sextics.size());
    for (auto& q : quartics) out.push_back(q.poly);
    for (auto& [t, s] : sextics) out.push_back(s);
    return out;
}

// ---------------------------------------------------- explicit polynomials

const Polynomial& base_sextic_f() {
    static const Polynomial f = [] {
        Polynomial p1 = -X(1, 3) * X(2, 1) + X(1, 1) * X(2, 3);
        Polynomial p2 = X(1, 3) * X(2, 2) - X(1, 2) * X(2, 3);
        Polynomial p3 = -X(1, 2) * X(2, 1) + X(1, 1) * X(2, 2);
        Polynomial inner = p2 * X(3, 1) - p3 * X(3, 3);
        return p1 * p2 * X(3, 2) * X(4, 1) - p1 * inner * X(4, 2) + p3 * inner * X(4, 3);
    }();
    return f;
}

Polynomial mu_pullback(const Polynomial& p) {
    return p.substitute([](VarId v) {
        if (var_space(v) != VarSpace::X)
            throw std::domain_error("mu_pullback: polynomial not in x-space");
        unsigned i = var_row(v), j = var_col(v);
        Polynomial s;
        for (unsigned k = 1; k <= 3; ++k)
            s += Polynomial::variable(avar(i, k)) * Polynomial::variable(bvar(k, j));
        return s;
    });
}

namespace {

// Leibniz expansion of a 3x3 determinant given an entry builder.
template <class Entry>
Polynomial det3(Entry entry) {
    static const int perms[6][4] = {{1, 2, 3, +1}, {2, 3, 1, +1}, {3, 1, 2, +1},
                                    {1, 3, 2, -1}, {3, 2, 1, -1}, {2, 1, 3, -1}};
    Polynomial d;
    for (auto& p : perms) {
        Polynomial t = entry(1, p[0]) * entry(2, p[1]) * entry(3, p[2]);
        d += p[3] > 0 ? t : -t;
    }
    return d;
}

}  // namespace

const Polynomial& det_D() {
    // The displayed six-term expansion; equals -det of b-columns (1,2,3).
    static const Polynomial d = [] {
        auto B = [](unsigned k, unsigned j) { return Polynomial::variable(bvar(k, j)); };
        return B(1, 3) * B(2, 2) * B(3, 1) - B(1, 2) * B(2, 3) * B(3, 1) -
               B(1, 3) * B(2, 1) * B(3, 2) + B(1, 1) * B(2, 3) * B(3, 2) +
               B(1, 2) * B(2, 1) * B(3, 3) - B(1, 1) * B(2, 2) * B(3, 3);
    }();
    return d;
}

Polynomial det3_B(const ColumnTriple& t) {
    return det3([&](unsigned r, unsigned c) { return Polynomial::variable(bvar(r, t.idx[c - 1])); });
}

Polynomial det3_A(const std::array<unsigned, 3>& rows) {
    return det3([&](unsigned r, unsigned c) { return Polynomial::variable(avar(rows[r - 1], c)); });
}

Polynomial aligned_det_B(const ColumnTriple& t) { return -det3_B(t); }

Polynomial minor4x4(const std::array<unsigned, 4>& rows, const std::array<unsigned, 4>& cols) {
    for (int i = 0; i < 3; ++i)
        if (rows[i] >= rows[i + 1] || cols[i] >= cols[i + 1])
            throw std::invalid_argument("minor4x4: indices must be strictly increasing");
    // Laplace expansion along the first row.
    std::vector<Term> terms;
    int perm[4] = {0, 1, 2, 3};
    do {
        int sign = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Monomial m;
        for (int i = 0; i < 4; ++i) m.mul_var(xvar(rows[i], cols[perm[i]]), 1);
        terms.push_back({std::move(m), Rational(sign)});
    } while (std::next_permutation(perm, perm + 4));
    return Polynomial::from_terms(std::move(terms));
}

const Polynomial& compute_f63() {
    static const Polynomial f63 = [] {
        auto q = divide_exact(mu_pullback(canonical_sextic_f()), det_D());
        if (!q) throw std::logic_error("compute_f63: pullback not divisible by D");
        return *q;
    }();
    return f63;
}

// ------------------------------------------------------------- minor ideal

const std::vector<Polynomial>& minor_ideal_gb(const std::vector<unsigned>& cols) {
    static std::map<std::vector<unsigned>, std::vector<Polynomial>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cols);
    if (it != cache.end()) return it->second;

    std::vector<Polynomial> minors;
    if (cols.size() >= 4) {
        for (auto& cs : subsets_of_size(static_cast<unsigned>(cols.size()), 4)) {
            std::array<unsigned, 4> cc{cols[cs[0] - 1], cols[cs[1] - 1], cols[cs[2] - 1],
                                       cols[cs[3] - 1]};
            minors.push_back(minor4x4({1, 2, 3, 4}, cc));
        }
    }
    std::vector<Polynomial> gb;
    if (!minors.empty()) {
        auto res = buchberger(minors, MonomialOrder::grevlex());
        if (res.stats.aborted) throw std::runtime_error("minor_ideal_gb: budget exceeded");
        gb = std::move(res.basis.generators);
    }
    return cache.emplace(cols, std::move(gb)).first->second;
}

// ------------------------------------------------------------ enumeration

namespace {

// All x-monomials on rows 1..R, columns 1..N with the exact row and column
// multidegrees (a contingency-table enumeration).
void enumerate_x_monomials_rec(std::vector<unsigned>& row_left, std::vector<unsigned>& col_left,
                               unsigned row, unsigned col, std::vector<unsigned>& cell,
                               std::vector<Monomial>& out) {
    const unsigned R = static_cast<unsigned>(row_left.size());
    const unsigned N = static_cast<unsigned>(col_left.size());
    if (row == R) {
        if (std::all_of(col_left.begin(), col_left.end(), [](unsigned c) { return c == 0; })) {
            Monomial m;
            for (unsigned i = 0; i < R; ++i)
                for (unsigned j = 0; j < N; ++j)
                    if (cell[i * N + j]) m.mul_var(xvar(i + 1, j + 1), cell[i * N + j]);
            out.push_back(std::move(m));
        }
        return;
    }
    if (col == N) {
        if (row_left[row] == 0)
            enumerate_x_monomials_rec(row_left, col_left, row + 1, 0, cell, out);
        return;
    }
    unsigned cap = std::min(row_left[row], col_left[col]);
    for (unsigned e = 0; e <= cap; ++e) {
        row_left[row] -= e;
        col_left[col] -= e;
        cell[row * N + col] = e;
        enumerate_x_monomials_rec(row_left, col_left, row, col + 1, cell, out);
        cell[row * N + col] = 0;
        row_left[row] += e;
        col_left[col] += e;
    }
}

std::vector<Monomial> enumerate_x_monomials(std::vector<unsigned> row_deg,
                                            std::vector<unsigned> col_deg) {
    std::vector<Monomial> out;
    std::vector<unsigned> cell(row_deg.size() * col_deg.size(), 0);
    enumerate_x_monomials_rec(row_deg, col_deg, 0, 0, cell, out);
    return out;
}

}  // namespace

// ------------------------------------------------------------ sextic solve

Polynomial sextic_for_triple(const ColumnTriple& t, unsigned n) {
    if (t.idx[2] > n) throw std::invalid_argument("sextic_for_triple: triple exceeds n");

    std::vector<unsigned> row_target{2, 2, 1, 1};
    std::vector<unsigned> col_target(n, 0);
    for (unsigned c : {1u, 2u, 3u}) ++col_target[c - 1];
    for (unsigned c : t.idx) ++col_target[c - 1];

    const std::vector<Monomial> candidates = enumerate_x_monomials(row_target, col_target);
    const std::size_t C = candidates.size();
    if (C == 0) throw std::logic_error("sextic_for_triple: empty candidate space");

    Polynomial rhs = compute_f63() * aligned_det_B(t);

    // Equations indexed by (a,b)-monomials: sum_c mu*(cand_c) x_c = rhs.
    struct Row {
        std::vector<std::pair<std::size_t, Rational>> lhs;
        Rational rhs;
    };
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    std::map<Monomial, Row, MonomialLess> eqs{MonomialLess{&grevlex}};
    for (std::size_t c = 0; c < C; ++c) {
        Polynomial img = mu_pullback(Polynomial(Rational(1), candidates[c]));
        for (auto& term : img.terms()) eqs[term.mono].lhs.push_back({c, term.coeff});
    }
    for (auto& term : rhs.terms()) eqs[term.mono].rhs = term.coeff;

    // Incremental exact elimination; stop once the solution is pinned down,
    // then verify the full polynomial identity.
    std::vector<std::vector<Rational>> pivot_rows;  // dense, length C + 1
    std::vector<std::size_t> pivot_cols;
    auto reduce_and_insert = [&](const Row& r) {
        std::vector<Rational> row(C + 1);
        for (auto& [c, v] : r.lhs) row[c] = v;
        row[C] = r.rhs;
        for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
            const Rational& lead = row[pivot_cols[p]];
            if (lead.is_zero()) continue;
            Rational f = lead / pivot_rows[p][pivot_cols[p]];
            for (std::size_t j = 0; j <= C; ++j)
                if (!pivot_rows[p][j].is_zero()) row[j] -= f * pivot_rows[p][j];
        }
        for (std::size_t j = 0; j < C; ++j) {
            if (!row[j].is_zero()) {
                pivot_cols.push_back(j);
                pivot_rows.push_back(std::move(row));
                return;
            }
        }
        if (!row[C].is_zero())
            throw std::logic_error("sextic_for_triple: inconsistent system (implementation bug)");
    };

    auto solve_current = [&]() {
        std::vector<Rational> x(C);
        for (std::size_t p = pivot_rows.size(); p-- > 0;) {
            Rational v = pivot_rows[p][C];
            for (std::size_t j = pivot_cols[p] + 1; j < C; ++j)
                if (!x[j].is_zero() && !pivot_rows[p][j].is_zero()) v -= pivot_rows[p][j] * x[j];
            x[pivot_cols[p]] = v / pivot_rows[p][pivot_cols[p]];
        }
        std::vector<Term> ts;
        for (std::size_t c = 0; c < C; ++c)
            if (!x[c].is_zero()) ts.push_back({candidates[c], x[c]});
        return Polynomial::from_terms(std::move(ts));
    };

    auto verified = [&](const Polynomial& cand_poly) {
        return mu_pullback(cand_poly) == rhs;
    };

    Polynomial solution;
    bool solved = false;
    std::size_t processed = 0;
    for (auto& [mono, r] : eqs) {
        reduce_and_insert(r);
        ++processed;
        if (pivot_rows.size() == C || (processed % 64 == 0 && pivot_rows.size() > C / 2)) {
            Polynomial trial = solve_current();
            if (verified(trial)) {
                solution = std::move(trial);
                solved = true;
                break;
            }
        }
    }
    if (!solved) {
        solution = solve_current();
        if (!verified(solution))
            throw std::logic_error("sextic_for_triple: no solution (implementation bug)");
    }

    // Canonical representative: normal form modulo the 4x4-minor ideal on
    // the sextic's column support.
    std::vector<unsigned> support{1, 2, 3};
    for (unsigned c : t.idx)
        if (std::find(support.begin(), support.end(), c) == support.end()) support.push_back(c);
    std::sort(support.begin(), support.end());
    const auto& gb = minor_ideal_gb(support);
    Polynomial canon = gb.empty() ? solution : normal_form(solution, gb, MonomialOrder::grevlex());
    if (canon.is_zero())
        throw std::logic_error("sextic_for_triple: canonical form vanished (implementation bug)");
    return canon;
}

// ------------------------------------------------------------ orbit route

namespace {

Polynomial relabel_columns(const Polynomial& p, const std::vector<unsigned>& image) {
    // image[j-1] is the new column index for old column j (x-space only).
    std::vector<Term> ts;
    for (auto& t : p.terms()) {
        Monomial m;
        for (auto& [v, e] : t.mono.factors())
            m.mul_var(xvar(var_row(v), image[var_col(v) - 1]), e);
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(std::move(ts));
}

}  // namespace

const Polynomial& canonical_sextic_f() {
    // Cyclic shift of the x-columns aligning the displayed sextic with the
    // canonical zero pattern; D is invariant under this shift, so the
    // factorization mu* f = D * f63 keeps the displayed determinant factor.
    static const Polynomial f = relabel_columns(base_sextic_f(), {2, 3, 1});
    return f;
}

std::vector<std::pair<ColumnTriple, Polynomial>> sextics_via_orbit(unsigned n) {
    if (n < 6) throw std::invalid_argument("sextics_via_orbit: requires n >= 6");

    // The 20 canonical sextics of the (4,6) case.
    std::vector<std::pair<ColumnTriple, Polynomial>> base;
    for (auto& s : subsets_of_size(6, 3))
        base.push_back({ColumnTriple(s[0], s[1], s[2]), sextic_for_triple(ColumnTriple(s[0], s[1], s[2]), 6)});

    std::map<ColumnTriple, Polynomial> out;
    for (auto& tail : subsets_of_size(n, 3, 4)) {  // images of {4,5,6}
        std::vector<unsigned> image{1, 2, 3, tail[0], tail[1], tail[2]};
        for (auto& [t, s] : base) {
            ColumnTriple t2(image[t.idx[0] - 1], image[t.idx[1] - 1], image[t.idx[2] - 1]);
            if (out.count(t2)) continue;
            Polynomial moved = relabel_columns(s, image);
            std::vector<unsigned> support{1, 2, 3};
            for (unsigned c : t2.idx)
                if (std::find(support.begin(), support.end(), c) == support.end())
                    support.push_back(c);
            std::sort(support.begin(), support.end());
            const auto& gb = minor_ideal_gb(support);
            Polynomial canon = gb.empty() ? moved : normal_form(moved, gb, MonomialOrder::grevlex());
            out.emplace(t2, std::move(canon));
        }
    }
    return {out.begin(), out.end()};
}

// -------------------------------------------------------------- generators

GeneratorSet generators(unsigned m, unsigned n) {
    if (m < 4 || n < 3) throw std::invalid_argument("generators: need m >= 4, n >= 3");
    GeneratorSet g;
    g.m = m;
    g.n = n;
    for (auto& rs : subsets_of_size(m, 4))
        for (auto& cs : subsets_of_size(n, 4)) {
            std::array<unsigned, 4> rr{rs[0], rs[1], rs[2], rs[3]};
            std::array<unsigned, 4> cc{cs[0], cs[1], cs[2], cs[3]};
            g.quartics.push_back({rr, cc, minor4x4(rr, cc)});
        }
    if (n >= 6) {
        g.sextics = sextics_via_orbit(n);
    } else {
        for (auto& s : subsets_of_size(n, 3)) {
            ColumnTriple t(s[0], s[1], s[2]);
            g.sextics.push_back({t, sextic_for_triple(t, n)});
        }
    }
    return g;
}

Polynomial transpose_x(const Polynomial& p) {
    std::vector<Term> ts;
    for (auto& t : p.terms()) {
        Monomial m;
        for (auto& [v, e] : t.mono.factors()) {
            if (var_space(v) != VarSpace::X)
                throw std::domain_error("transpose_x: polynomial not in x-space");
            m.mul_var(xvar(var_col(v), var_row(v)), e);
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(std::move(ts));
}

// ---------------------------------------------------------------- sampling

std::pair<Matrix<Rational>, Matrix<Rational>> sample_patterned_pair(unsigned m, unsigned n,
                                                                    Rng& rng) {
    ZeroPattern p = ZeroPattern::canonical(m, n);
    Matrix<Rational> a(m, 3), b(3, n);
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned k = 1; k <= 3; ++k)
            a(i - 1, k - 1) = p.a_is_zero(i, k) ? Rational(0) : rng.rational();
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned j = 1; j <= n; ++j)
            b(k - 1, j - 1) = p.b_is_zero(k, j) ? Rational(0) : rng.rational();
    return {std::move(a), std::move(b)};
}

Rational evaluate_at_matrix(const Polynomial& p, const Matrix<Rational>& m) {
    return p.evaluate<Rational>([&](VarId v) {
        if (var_space(v) != VarSpace::X)
            throw std::domain_error("evaluate_at_matrix: polynomial not in x-space");
        return m(var_row(v) - 1, var_col(v) - 1);
    });
}

Rational evaluate_at_pair(const Polynomial& p, const Matrix<Rational>& a,
                          const Matrix<Rational>& b) {
    return p.evaluate<Rational>([&](VarId v) {
        switch (var_space(v)) {
            case VarSpace::A:
                return a(var_row(v) - 1, var_col(v) - 1);
            case VarSpace::B:
                return b(var_row(v) - 1, var_col(v) - 1);
            default:
                throw std::domain_error("evaluate_at_pair: x-variable present");
        }
    });
}

// ------------------------------------------------------------ equivariance

EquivarianceReport check_gl3_equivariance(const Matrix<Rational>& g, unsigned trials, Rng& rng) {
    if (g.rows() != 3 || g.cols() != 3 || g.det().is_zero())
        throw std::invalid_argument("check_gl3_equivariance: g must be invertible 3x3");
    // g^-1 column by column.
    Matrix<Rational> ginv(3, 3);
    for (unsigned j = 0; j < 3; ++j) {
        std::vector<Rational> e(3);
        e[j] = Rational(1);
        auto col = g.solve(e);
        for (unsigned i = 0; i < 3; ++i) ginv(i, j) = (*col)[i];
    }
    Rational detg = g.det();
    const Polynomial& f63 = compute_f63();
    const Polynomial muf = mu_pullback(base_sextic_f());

    EquivarianceReport rep;
    rep.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        Matrix<Rational> a(4, 3), b(3, 3);
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned k = 0; k < 3; ++k) a(i, k) = rng.rational();
        for (unsigned k = 0; k < 3; ++k)
            for (unsigned j = 0; j < 3; ++j) b(k, j) = rng.rational();
        Matrix<Rational> ag = a * g;
        Matrix<Rational> gib = ginv * b;

        Rational lhs1 = evaluate_at_pair(f63, ag, gib);
        Rational rhs1 = detg * evaluate_at_pair(f63, a, b);
        if (lhs1 != rhs1) {
            rep.scaling_ok = false;
            rep.failures.push_back("scaling identity failed at trial " + std::to_string(t));
        }
        Rational lhs2 = evaluate_at_pair(muf, ag, gib);
        Rational rhs2 = evaluate_at_pair(muf, a, b);
        if (lhs2 != rhs2) {
            rep.pullback_ok = false;
            rep.failures.push_back("pullback invariance failed at trial " + std::to_string(t));
        }
    }
    return rep;
}

// ------------------------------------------------------------ verification

GbReport verify_gb(unsigned m, unsigned n, const EngineOptions& opts) {
    GbReport rep;
    rep.m = m;
    rep.n = n;
    auto gens = generators(m, n).all();
    const MonomialOrder order = MonomialOrder::grevlex();

    auto cert = is_groebner_basis(gens, order, opts);
    rep.groebner_pass = cert.is_basis;
    rep.aborted = cert.stats.aborted;
    rep.stats = cert.stats;
    if (rep.aborted) return rep;

    // Appendix-style reduced-basis equality: the reduced basis computed by
    // the full algorithm must equal the autoreduction of the input.
    auto reduced_input = autoreduce(gens, order);
    auto full = buchberger(gens, order, opts);
    rep.aborted = full.stats.aborted;
    rep.reduced_equality_pass = !full.stats.aborted && full.basis.generators == reduced_input;
    rep.stats.seconds += full.stats.seconds;
    return rep;
}

DimensionReport dimension_check(unsigned m, unsigned n, unsigned samples, Rng& rng) {
    DimensionReport rep;
    rep.m = m;
    rep.n = n;
    rep.samples = samples;
    rep.expected = 3 * m + 3 * n - 10;

    ZeroPattern pat = ZeroPattern::canonical(m, n);
    // Free parameters: unpatterned entries of A and B.
    std::vector<std::pair<char, std::pair<unsigned, unsigned>>> params;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned k = 1; k <= 3; ++k)
            if (!pat.a_is_zero(i, k)) params.push_back({'a', {i, k}});
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned j = 1; j <= n; ++j)
            if (!pat.b_is_zero(k, j)) params.push_back({'b', {k, j}});

    for (unsigned s = 0; s < samples; ++s) {
        auto [a, b] = sample_patterned_pair(m, n, rng);
        // Jacobian of x_ij = sum_k a_ik b_kj in the free parameters.
        Matrix<Rational> jac(m * n, params.size());
        for (unsigned i = 1; i <= m; ++i)
            for (unsigned j = 1; j <= n; ++j) {
                unsigned row = (i - 1) * n + (j - 1);
                for (std::size_t c = 0; c < params.size(); ++c) {
                    auto [kind, rc] = params[c];
                    if (kind == 'a' && rc.first == i)
                        jac(row, c) = b(rc.second - 1, j - 1);
                    else if (kind == 'b' && rc.second == j)
                        jac(row, c) = a(i - 1, rc.first - 1);
                }
            }
        rep.max_rank = std::max(rep.max_rank, static_cast<unsigned>(jac.rank()));
    }
    return rep;
}

bool in_quartic_span(const Polynomial& s, unsigned m, unsigned n,
                     const std::vector<Polynomial>& extra) {
    auto md = s.multidegree(m, n);
    if (!md) throw std::invalid_argument("in_quartic_span: polynomial not multihomogeneous");

    std::vector<Polynomial> span = extra;
    for (auto& rs : subsets_of_size(m, 4)) {
        std::vector<unsigned> row_rest = md->row_degrees;
        bool ok = true;
        for (unsigned r : rs) {
            if (row_rest[r - 1] == 0) { ok = false; break; }
            --row_rest[r - 1];
        }
        if (!ok) continue;
        for (auto& cs : subsets_of_size(n, 4)) {
            std::vector<unsigned> col_rest = md->col_degrees;
            bool ok2 = true;
            for (unsigned c : cs) {
                if (col_rest[c - 1] == 0) { ok2 = false; break; }
                --col_rest[c - 1];
            }
            if (!ok2) continue;
            Polynomial q = minor4x4({rs[0], rs[1], rs[2], rs[3]}, {cs[0], cs[1], cs[2], cs[3]});
            for (auto& mult : enumerate_x_monomials(row_rest, col_rest))
                span.push_back(q.times_term(Rational(1), mult));
        }
    }
    if (span.empty()) return s.is_zero();

    // Exact linear algebra over the common monomial support.
    std::map<Monomial, std::size_t, MonomialLess> index{
        MonomialLess{[]() -> const MonomialOrder* {
            static const MonomialOrder g = MonomialOrder::grevlex();
            return &g;
        }()}};
    auto touch = [&](const Polynomial& p) {
        for (auto& t : p.terms()) index.emplace(t.mono, 0);
    };
    for (auto& p : span) touch(p);
    touch(s);
    std::size_t r = 0;
    for (auto& [mono, id] : index) id = r++;

    Matrix<Rational> mat(index.size(), span.size());
    for (std::size_t c = 0; c < span.size(); ++c)
        for (auto& t : span[c].terms()) mat(index[t.mono], c) = t.coeff;
    std::vector<Rational> rhs(index.size());
    for (auto& t : s.terms()) rhs[index[t.mono]] = t.coeff;
    return mat.solve(rhs).has_value();
}

MinimalityReport minimality_check(unsigned m, unsigned n) {
    MinimalityReport rep;
    rep.m = m;
    rep.n = n;
    GeneratorSet g = generators(m, n);
    rep.quartic_count = g.quartics.size();

    // (i) the minors are linearly independent.
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    std::map<Monomial, std::size_t, MonomialLess> index{MonomialLess{&grevlex}};
    for (auto& q : g.quartics)
        for (auto& t : q.poly.terms()) index.emplace(t.mono, 0);
    std::size_t r = 0;
    for (auto& [mono, id] : index) id = r++;
    Matrix<Rational> coeff(index.size(), g.quartics.size());
    for (std::size_t c = 0; c < g.quartics.size(); ++c)
        for (auto& t : g.quartics[c].poly.terms()) coeff(index[t.mono], c) = t.coeff;
    rep.quartic_rank = coeff.rank();

    // (ii) each sextic lies outside the span of matching quartic multiples
    // plus the other sextics of the same multidegree.
    for (auto& [t, s] : g.sextics) {
        auto md = s.multidegree(m, n);
        std::vector<Polynomial> others;
        for (auto& [t2, s2] : g.sextics)
            if (!(t2 == t) && s2.multidegree(m, n) == md) others.push_back(s2);
        if (in_quartic_span(s, m, n, others))
            rep.sextic_failures.push_back(t.str());
    }
    return rep;
}

mpz_class component_count(unsigned m, unsigned n) {
    mpz_class M(m), N(n);
    mpz_class closed = M * N + M * (M - 1) * (M - 2) * (M + N - 6) * N * (N - 1) * (N - 2) / 4;
    mpz_class expanded = M * N + 36 * (binom(m, 3) * binom(n, 4) + binom(m, 4) * binom(n, 3));
    if (closed != expanded)
        throw std::logic_error("component_count: formula mismatch at m=" + std::to_string(m) +
                               ", n=" + std::to_string(n));
    return closed;
}

}  // namespace nnr3
