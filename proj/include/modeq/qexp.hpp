#ifndef MODEQ_QEXP_HPP
#define MODEQ_QEXP_HPP

#include <map>

#include "modeq/mpoly.hpp"

namespace modeq {

// Truncated q-series with exact integer coefficients. Exponents live in
// (1/ram) Z: the entry (k, c) means c * q^(k/ram). All exponents below
// trunc/ram are stored exactly; O(q^(trunc/ram)) is implied. Operations
// track the weakest truncation of their operands. No zero coefficients are
// stored.
class IntSeries {
public:
    IntSeries(int ram, long trunc) : ram_(ram), trunc_(trunc) {}

    static IntSeries zero(int ram, long trunc) { return IntSeries(ram, trunc); }
    static IntSeries one(long trunc);
    // c * q^(k/ram)
    static IntSeries term(int ram, long k, BigInt c, long trunc);

    int ram() const { return ram_; }
    long trunc() const { return trunc_; }
    const std::map<long, BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // Lowest stored index; only meaningful for nonzero series.
    long ord() const;
    BigInt coeff(long k) const;           // index in the (1/ram) grid
    BigInt coeff_q(long n) const;         // integer exponent q^n

    void set(long k, BigInt c);

    IntSeries operator+(const IntSeries& o) const;
    IntSeries operator-(const IntSeries& o) const;
    IntSeries operator*(const IntSeries& o) const;
    IntSeries operator*(const BigInt& c) const;
    IntSeries operator-() const;

    IntSeries pow(unsigned e) const;

    // Multiplicative inverse; the leading coefficient must be +-1 so the
    // result stays integral.
    IntSeries inverse() const;

    // Substitute q -> q^t (exponent scale by t).
    IntSeries scale_exponents(long t) const;

    // Substitute q -> q^(1/l): same stored indices on the l-times finer
    // grid, so every exponent is divided by l.
    IntSeries as_root_substitution(int l) const;

    // Refine the grid: representation with ramification ram*t, same value.
    IntSeries with_ram(int new_ram) const;

    // Exact division by an integer; "nonzero-remainder" when not divisible.
    IntSeries divexact(const BigInt& c) const;

    IntSeries truncated(long new_trunc) const;

    std::string to_string(int max_terms = 12) const;

private:
    int ram_;
    long trunc_; // exponents < trunc_/ram_ are exact
    std::map<long, BigInt> coeffs_;
};

// Eisenstein series E4, E6 and the discriminant product Delta, exact to
// O(q^T).
IntSeries eisenstein_e4(long T);
IntSeries eisenstein_e6(long T);
// Delta via the eta product q prod (1-q^n)^24 (pentagonal-number expansion).
IntSeries delta_eta_product(long T);

// j = E4^3 / Delta, integral, starting at q^{-1}; exact to O(q^{T-1}).
IntSeries j_series(long T);

// Root-of-unity filter: keeps the coefficients whose grid index is
// divisible by l and divides the ramification by l. Requires l | ram.
IntSeries u_operator(const IntSeries& s, int l);

// Writes a level-1 holomorphic-away-from-infinity q-series as a polynomial
// in j by greedy pole-order elimination; degree equals the pole order.
// "nonzero-remainder" if the series is not such a polynomial.
MPoly series_to_j_polynomial(const IntSeries& s, const IntSeries& j,
                             const std::vector<std::string>& out_vars,
                             const std::string& out_var);

// The elliptic modular polynomial Phi_l in variables (X, Y): monic of
// degree l+1 in each variable, symmetric, integer coefficients, and
// Phi_l(j(q^l), j(q)) = 0 through the working truncation.
MPoly phi_elliptic(long l, long t_margin = 16);

} // namespace modeq

#endif
