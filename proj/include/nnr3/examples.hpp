#pragma once

#include "nnr3/geometry.hpp"
#include "nnr3/quadext.hpp"

#include <string>
#include <vector>

namespace nnr3 {

// Family of 3n x 3n matrices of nonnegative rank >= 4 whose wide
// submatrices all have nonnegative rank 3: W is a (rationally
// approximated) regular 3n-gon, V is cut out by the chords w_i w_{i+n},
// and V' expands V away from the center by the factor (1 + eps).
struct MoitraExample {
    unsigned n = 0;
    Rational eps;
    unsigned long precision = 0;

    ConvexPolygon<Rational> W, V, Vprime;
    Matrix<Rational> matrix;  // 3n x 3n, entry (i,j) = i-th W-facet at V'-vertex j

    struct Report {
        bool shapes_ok = false;              // W and V are 3n-gons, V' inside W
        bool no_triangle_contains_vprime = false;  // => nonnegative rank >= 4
        bool deltas_cover_all_but_edge_pairs = false;
        bool submatrix_spot_check = false;   // a max-size wide submatrix has nnr 3
        unsigned max_guaranteed_columns = 0; // ceil(3n/2) - 1
        std::vector<std::string> failures;
        bool pass() const {
            return shapes_ok && no_triangle_contains_vprime &&
                   deltas_cover_all_but_edge_pairs && submatrix_spot_check;
        }
    } report;
};

MoitraExample moitra_example(unsigned n, const Rational& eps,
                             unsigned long precision = 1'000'000);

// The 4 x 8 maximal boundary configuration over Q(sqrt(2)): W a unit
// square, V the octagon cut by the corner lines at angles pi/8 and
// 3*pi/8 (tan(pi/8) = sqrt(2) - 1 exactly), V' with the perpendicular
// vertices pushed a distance eps outward.
struct SquareExample {
    Rational eps;

    ConvexPolygon<Quad2> W, V, Vprime;
    std::vector<std::size_t> angular, perpendicular;  // V-vertex indices by type
    Matrix<Quad2> matrix;              // 4 x 8 lift of V'
    Matrix<Quad2> matrix_unperturbed;  // 4 x 8 lift of V

    struct Report {
        bool boundary_at_base = false;        // (i) V itself is a boundary configuration
        bool vprime_no_triangle = false;      // (ii) no candidate contains V'
        bool angular_deletions = false;       // (iii) drop an angular vertex -> inside a delta_w
        bool perpendicular_deletions = false; // (iv) drop a perpendicular vertex -> delta_e in W
        std::vector<std::string> tight_fits;  // exact incidences witnessing the tight fit
        std::vector<std::string> failures;
        bool pass() const {
            return boundary_at_base && vprime_no_triangle && angular_deletions &&
                   perpendicular_deletions;
        }
    } report;
};

SquareExample square_example(const Rational& eps);

// The square-family analogue with a rational slope (tan theta = slope);
// slope between tan(pi/8) and 1 exclusive yields interior configurations.
Matrix<Rational> square_slope_matrix(const Rational& slope);

// Classic slack matrix of the square: nonnegative rank 4, V = W.
Matrix<Rational> square_slack_matrix();

}  // namespace nnr3
