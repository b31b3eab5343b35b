#pragma once

#include "nnr3/groebner.hpp"
#include "nnr3/matrix.hpp"
#include "nnr3/polynomial.hpp"
#include "nnr3/rng.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nnr3 {

// The canonical zero patterns cutting out the boundary component under
// study: four zeros in the left m x 3 factor (three columns, distinct
// rows), three zeros in the right 3 x n factor (distinct rows and columns).
struct ZeroPattern {
    unsigned m, n;
    std::vector<std::pair<unsigned, unsigned>> a_zeros;  // 1-based (row, col) in m x 3
    std::vector<std::pair<unsigned, unsigned>> b_zeros;  // 1-based (row, col) in 3 x n

    static ZeroPattern canonical(unsigned m, unsigned n);
    bool a_is_zero(unsigned i, unsigned k) const;
    bool b_is_zero(unsigned k, unsigned j) const;
};

struct ColumnTriple {
    std::array<unsigned, 3> idx;  // strictly increasing, 1-based

    ColumnTriple(unsigned i, unsigned j, unsigned k);
    friend bool operator<(const ColumnTriple& a, const ColumnTriple& b) { return a.idx < b.idx; }
    friend bool operator==(const ColumnTriple& a, const ColumnTriple& b) { return a.idx == b.idx; }
    std::string str() const;
};

struct GeneratorSet {
    unsigned m = 0, n = 0;
    struct Quartic {
        std::array<unsigned, 4> rows, cols;
        Polynomial poly;
    };
    std::vector<Quartic> quartics;                        // C(m,4) * C(n,4) minors
    std::vector<std::pair<ColumnTriple, Polynomial>> sextics;  // C(n,3), sorted by triple

    std::vector<Polynomial> all() const;
};

// --- explicit polynomials of the construction ---

// The explicit sextic f in the x-variables (rows 1..4, columns 1..3),
// exactly as displayed. Its compatible zero pattern has the b-zeros at
// (1,3), (2,1), (3,2), a cyclic shift of the canonical pattern.
const Polynomial& base_sextic_f();

// The same sextic with x-columns relabeled by the cycle 1->2->3->1, which
// vanishes on products A*B with the canonical zero pattern. This is the
// canonical degree-6 generator for the column triple (1,2,3).
const Polynomial& canonical_sextic_f();

// Substitution x_{ij} |-> sum_k a_{ik} b_{kj} with fully generic a, b.
Polynomial mu_pullback(const Polynomial& p);

// The six-term 3x3 determinant factor D in the b-variables, with the sign
// convention of the displayed expansion (D = -det of b-columns (1,2,3)).
const Polynomial& det_D();

// det of the 3x3 matrix of b-columns (i,j,k), standard sign.
Polynomial det3_B(const ColumnTriple& t);
// det of the 3x3 matrix of a-rows (i,j,k), standard sign.
Polynomial det3_A(const std::array<unsigned, 3>& rows);
// 4x4 minor of the x-matrix on the given rows and columns (ascending).
Polynomial minor4x4(const std::array<unsigned, 4>& rows, const std::array<unsigned, 4>& cols);

// The bidegree-(6,3) cofactor of the pullback: mu*(f) = D * f63. Cached;
// throws if the division ever left a remainder.
const Polynomial& compute_f63();

// Triple determinant aligned with D's sign: aligned_det_B((1,2,3)) == D.
Polynomial aligned_det_B(const ColumnTriple& t);

// --- constructions ---

// The canonical degree-6 generator for a column triple: the unique (modulo
// the 4x4-minor ideal) x-polynomial with mu*(f_t) = f63 * aligned_det_B(t),
// found by exact linear solve over the candidate monomial space and
// canonicalized by normal form against the minor ideal on its columns.
Polynomial sextic_for_triple(const ColumnTriple& t, unsigned n);

// All C(n,3) sextics obtained from the 20 sextics of the (4,6) case by the
// column substitutions fixing {1,2,3} and mapping {4,5,6} increasingly
// into {4,..,n}, deduplicated and re-canonicalized. Requires n >= 6.
std::vector<std::pair<ColumnTriple, Polynomial>> sextics_via_orbit(unsigned n);

// Full generator set: all 4x4 minors plus the canonical sextics.
GeneratorSet generators(unsigned m, unsigned n);

// Reduced Groebner basis of the 4x4 minor ideal on rows {1..4} and the
// given columns, cached (used to canonicalize sextic representatives).
const std::vector<Polynomial>& minor_ideal_gb(const std::vector<unsigned>& cols);

// Transpose x-variable indices (row i, col j) -> (row j, col i).
Polynomial transpose_x(const Polynomial& p);

// --- sampling ---

// Random factor pair with the canonical zero pattern; entries are uniform
// small rationals, patterned zeros exactly zero.
std::pair<Matrix<Rational>, Matrix<Rational>> sample_patterned_pair(unsigned m, unsigned n, Rng& rng);

// Evaluate an x-space polynomial at a matrix point.
Rational evaluate_at_matrix(const Polynomial& p, const Matrix<Rational>& m);
// Evaluate an (a,b)-space polynomial at a factor pair.
Rational evaluate_at_pair(const Polynomial& p, const Matrix<Rational>& a, const Matrix<Rational>& b);

// --- verification reports ---

struct EquivarianceReport {
    unsigned trials = 0;
    std::uint64_t seed = 0;
    bool scaling_ok = true;   // f63(Ag, g^-1 B) = det(g) f63(A, B)
    bool pullback_ok = true;  // (mu* f)(Ag, g^-1 B) = (mu* f)(A, B)
    std::vector<std::string> failures;
    bool pass() const { return scaling_ok && pullback_ok; }
};

EquivarianceReport check_gl3_equivariance(const Matrix<Rational>& g, unsigned trials, Rng& rng);

struct GbReport {
    unsigned m = 0, n = 0;
    bool groebner_pass = false;
    bool reduced_equality_pass = false;
    bool aborted = false;
    EngineStats stats;
};

GbReport verify_gb(unsigned m, unsigned n, const EngineOptions& opts = {});

struct DimensionReport {
    unsigned m = 0, n = 0, samples = 0;
    std::uint64_t seed = 0;
    unsigned expected = 0;   // 3m + 3n - 10
    unsigned max_rank = 0;
    bool pass() const { return max_rank == expected; }
};

DimensionReport dimension_check(unsigned m, unsigned n, unsigned samples, Rng& rng);

struct MinimalityReport {
    unsigned m = 0, n = 0;
    std::size_t quartic_count = 0;
    std::size_t quartic_rank = 0;           // must equal quartic_count
    std::vector<std::string> sextic_failures;  // triples found inside the span
    bool pass() const {
        return quartic_rank == quartic_count && sextic_failures.empty();
    }
};

MinimalityReport minimality_check(unsigned m, unsigned n);

// Whether an x-polynomial lies in the span of {monomial * minor} products
// of matching multidegree plus the given extra polynomials. Backs the
// minimality test and its degenerate sanity check.
bool in_quartic_span(const Polynomial& s, unsigned m, unsigned n,
                     const std::vector<Polynomial>& extra);

// Closed component-count formula; asserts the two expansions agree.
mpz_class component_count(unsigned m, unsigned n);

}  // namespace nnr3
