#pragma once

#include "nnr3/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nnr3 {

struct GroebnerBasis {
    std::vector<Polynomial> generators;  // monic, autoreduced when reduced==true
    MonomialOrder order;
    bool reduced = false;
};

struct EngineOptions {
    bool product_criterion = true;
    bool chain_criterion = true;
    unsigned threads = 1;
    std::uint64_t max_pairs = 1'000'000;  // work budget; 0 = unlimited
    double max_seconds = 1800.0;          // 0 = unlimited
};

struct EngineStats {
    std::uint64_t pairs_considered = 0;
    std::uint64_t pairs_skipped = 0;   // by product/chain criteria
    std::uint64_t reductions = 0;      // S-polynomials actually reduced
    std::uint64_t basis_growth = 0;    // elements appended beyond the input
    double seconds = 0.0;
    bool aborted = false;              // budget exceeded
};

struct BuchbergerResult {
    GroebnerBasis basis;
    EngineStats stats;
};

struct GroebnerCertificate {
    bool is_basis = false;
    EngineStats stats;
    // Failing pairs (indices into the input) with their nonzero remainders.
    struct Failure {
        std::size_t i, j;
        Polynomial remainder;
    };
    std::vector<Failure> failures;
};

// lcm/lt(p) * p - lcm/lt(q) * q, coefficients cleared to make both leading
// terms cancel exactly.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);

// Buchberger's algorithm with normal pair selection (minimal lcm degree
// first, ties by index pair). Output is the reduced (autoreduced, monic)
// basis. Deterministic for any thread count.
BuchbergerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            const EngineOptions& opts = {});

// True iff every S-polynomial not dismissed by the product criterion
// reduces to zero modulo gens.
GroebnerCertificate is_groebner_basis(const std::vector<Polynomial>& gens,
                                      const MonomialOrder& order,
                                      const EngineOptions& opts = {});

// Full reduction modulo a basis; unique remainder when the basis is a
// Groebner basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Monic autoreduced generating set (equal to the reduced Groebner basis
// when the input is a Groebner basis), sorted ascending by leading term.
std::vector<Polynomial> autoreduce(std::vector<Polynomial> gens, const MonomialOrder& order);

bool ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                      const MonomialOrder& order, const EngineOptions& opts = {});

}  // namespace nnr3
