#ifndef MODEQ_HEIGHT_HPP
#define MODEQ_HEIGHT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "modeq/mpoly.hpp"
#include "modeq/ratfrac.hpp"

namespace modeq {

// Absolute logarithmic Weil height in natural-log units. Heights over Q are
// computed exactly up to floating-point rounding of the final log; when a
// value comes from numeric root isolation it carries a certified enclosure.
struct HeightValue {
    double value = 0.0;
    std::optional<std::pair<double, double>> enclosure; // [lo, hi], hi-lo <= tol
};

HeightValue height_projective(const std::vector<BigRat>& tuple);
HeightValue height_affine(const std::vector<BigRat>& tuple);
HeightValue height_poly(const MPoly& p);

// Height of a fraction written with coprime parts. Multivariate input must
// be declared coprime ("not-declared-coprime" otherwise); univariate input
// is reduced internally with gcd_univariate.
HeightValue height_frac(const RatFrac& f);

// Height of the roots of an irreducible univariate rational polynomial via
// the Mahler measure, with a certified enclosure of width <= tol.
HeightValue height_algebraic(const MPoly& minpoly, double tol = 1e-12);

// Prop-style closed-form bounds. Real outputs are rounded upward so they
// remain valid bounds.

struct EvalBlock {
    int size = 1;      // number of substituted variables in the block
    int degree = 0;    // total-degree bound of P in the block variables
    double height = 0; // affine height of the block's values
};

// h(P) + sum #I_k log(d_k+1) + sum d_k h(block_k)
double bound_eval_height(double h_poly, const std::vector<EvalBlock>& blocks);

// sum h(alpha_k) + d log 2 for a monic degree-d polynomial from its roots
double bound_monic_from_roots(const std::vector<double>& root_heights, int d);

// h(P) + log 2 bounds the height of any root
double bound_root_height(double h_poly);

struct InterpBoundParams {
    long long A = 0, B = 0; // evaluation interval [A, B]
    int d = 1;              // degree bound
    long long N = 0;        // number of evaluation points
    double H = 0;           // height bound of the evaluations
    double eta = 1;         // density parameter >= 1
    double C_L = 960;       // field constant; 960 for Q
    int d_L = 1;            // field degree

    long long D() const { return B - A; }
    long long M() const { return std::max(std::llabs(A), std::llabs(B)); }
};

// N/(N-d) H + D log D + d log(2M) + log(d+1); requires N >= d+1
double bound_interp_poly(const InterpBoundParams& p);

// H + C_L eta d log(eta d H) + d log(2M) + log(d+1); every hypothesis
// violation is reported as "hypothesis-violated" naming the condition.
double bound_interp_frac(const InterpBoundParams& p);

} // namespace modeq

#endif
