#ifndef MODEQ_RESULTANT_HPP
#define MODEQ_RESULTANT_HPP

#include "modeq/mpoly.hpp"

namespace modeq {

// Res_var(a, b) with the Sylvester-determinant convention
// res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots of a,
// computed by the fraction-free subresultant remainder sequence.
// Throws "both-constant-in-var" when neither input has positive degree.
MPoly resultant(const MPoly& a, const MPoly& b, const std::string& var);

struct BezoutResult {
    MPoly u, v, z; // u*q + v*e = z = res_var(q, e), deg_var(u) < deg_var(e)
};

// Extended subresultant sequence: cofactors for the resultant of (q, e).
// Requires e of positive degree in var.
BezoutResult bezout(const MPoly& q, const MPoly& e, const std::string& var);

// Monic gcd of two univariate polynomials over Q (inputs must involve a
// single common variable; "multivariate-input" otherwise). gcd(a, 0) is
// monic(a); gcd(0, 0) = 0.
MPoly gcd_univariate(const MPoly& a, const MPoly& b);

// Pseudo-remainder of a by b with respect to var: lc(b)^(da-db+1) * a mod b.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, const std::string& var);

} // namespace modeq

#endif
