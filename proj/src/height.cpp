#include "modeq/height.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "modeq/resultant.hpp"

namespace modeq {

namespace {

// Nudge a bound upward by a few ulps so rounded arithmetic cannot make it
// understate the true value.
double up(double x) {
    double y = std::nextafter(x, std::numeric_limits<double>::infinity());
    return std::nextafter(y, std::numeric_limits<double>::infinity());
}

// Scale a rational tuple to coprime integers; returns max |entry|.
BigInt coprime_integer_max(const std::vector<BigRat>& tuple) {
    BigInt lcm(1);
    for (const auto& x : tuple)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    BigInt gcd(0), maxabs(0);
    for (const auto& x : tuple) {
        BigInt n = x.get_num() * (lcm / x.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
        BigInt a = abs(n);
        if (a > maxabs) maxabs = a;
    }
    if (gcd == 0) fail("all-zero-tuple", "projective height of the zero tuple");
    return maxabs / gcd;
}

} // namespace

HeightValue height_projective(const std::vector<BigRat>& tuple) {
    if (tuple.empty()) fail("all-zero-tuple", "projective height of an empty tuple");
    BigInt m = coprime_integer_max(tuple);
    return {log_bigint(m), std::nullopt};
}

HeightValue height_affine(const std::vector<BigRat>& tuple) {
    std::vector<BigRat> t;
    t.reserve(tuple.size() + 1);
    t.emplace_back(1);
    t.insert(t.end(), tuple.begin(), tuple.end());
    return height_projective(t);
}

HeightValue height_poly(const MPoly& p) {
    std::vector<BigRat> coeffs;
    for (const auto& [e, c] : p.terms()) coeffs.push_back(c);
    if (coeffs.empty()) return {0.0, std::nullopt};
    return height_affine(coeffs);
}

HeightValue height_frac(const RatFrac& f) {
    const MPoly* num = &f.num();
    const MPoly* den = &f.den();
    MPoly rnum, rden;
    if (f.flag() != Coprimality::declared_coprime) {
        std::size_t used = 0, count = 0;
        for (std::size_t i = 0; i < f.num().vars().size(); ++i) {
            if (f.num().degree_in(i) > 0 || f.den().degree_in(i) > 0) {
                used = i;
                ++count;
            }
        }
        if (count > 1)
            fail("not-declared-coprime",
                 "multivariate fraction height requires declared coprimality");
        MPoly g = gcd_univariate(f.num(), f.den());
        if (g.total_degree_or(0) > 0) {
            rnum = *f.num().exact_div(g);
            rden = *f.den().exact_div(g);
            num = &rnum;
            den = &rden;
        }
        (void)used;
    }
    std::vector<BigRat> coeffs;
    for (const auto& [e, c] : num->terms()) coeffs.push_back(c);
    for (const auto& [e, c] : den->terms()) coeffs.push_back(c);
    return height_projective(coeffs);
}

namespace {

using Cplx = std::complex<long double>;

Cplx eval_poly(const std::vector<Cplx>& c, Cplx z) {
    Cplx acc(0.0L, 0.0L);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

// Aberth-Ehrlich simultaneous iteration; coefficients ascending.
std::vector<Cplx> aberth_roots(const std::vector<Cplx>& coeffs, int max_iter) {
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Cplx> deriv(n);
    for (int i = 1; i <= n; ++i) deriv[i - 1] = coeffs[i] * static_cast<long double>(i);
    long double radius = 0.0L;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(coeffs[i] / coeffs[n]));
    radius = 1.0L + radius; // Cauchy bound
    std::vector<Cplx> z(n);
    for (int i = 0; i < n; ++i) {
        long double angle = 2.0L * 3.14159265358979323846L * i / n + 0.4L;
        z[i] = std::polar(radius * 0.7L + 0.3L * i / std::max(1, n), angle);
    }
    for (int it = 0; it < max_iter; ++it) {
        long double worst = 0.0L;
        for (int i = 0; i < n; ++i) {
            Cplx p = eval_poly(coeffs, z[i]);
            Cplx dp = eval_poly(deriv, z[i]);
            if (std::abs(dp) == 0.0L) {
                z[i] += Cplx(1e-3L, 1e-3L);
                worst = 1.0L;
                continue;
            }
            Cplx ratio = p / dp;
            Cplx sum(0.0L, 0.0L);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += Cplx(1.0L, 0.0L) / (z[i] - z[j]);
            Cplx w = ratio / (Cplx(1.0L, 0.0L) - ratio * sum);
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[i])));
        }
        if (worst < 1e-19L) break;
    }
    return z;
}

} // namespace

HeightValue height_algebraic(const MPoly& minpoly, double tol) {
    if (tol <= 0) fail("hypothesis-violated", "tol must be positive");
    std::size_t used = minpoly.vars().size(), count = 0;
    for (std::size_t i = 0; i < minpoly.vars().size(); ++i) {
        if (minpoly.degree_in(i) > 0) {
            used = i;
            ++count;
        }
    }
    if (count > 1) fail("multivariate-input", "height_algebraic needs a univariate polynomial");
    if (count == 0) fail("hypothesis-violated", "height_algebraic needs positive degree");
    auto coeffs_m = minpoly.univariate_coeffs(used);
    int n = static_cast<int>(coeffs_m.size()) - 1;

    // Clear denominators: the Mahler measure uses the integer model.
    BigRat content = minpoly.integer_content();
    std::vector<BigRat> ic;
    for (auto& c : coeffs_m) ic.push_back(c.constant_value() / content);
    BigInt lead = ic.back().get_num();

    std::vector<Cplx> dc(ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i)
        dc[i] = Cplx(static_cast<long double>(mpq_get_d(ic[i].get_mpq_t())), 0.0L);

    const int cap = 10000;
    std::vector<Cplx> roots = aberth_roots(dc, cap);

    std::vector<Cplx> deriv(n);
    for (int i = 1; i <= n; ++i) deriv[i - 1] = dc[i] * static_cast<long double>(i);

    long double lo = 0.0L, hi = 0.0L;
    for (const Cplx& z : roots) {
        Cplx p = eval_poly(dc, z);
        Cplx dp = eval_poly(deriv, z);
        if (std::abs(dp) == 0.0L)
            fail("nonconvergence", "derivative vanished at an approximate root");
        // Distance to the nearest true root is at most n |p/p'|.
        long double rad = static_cast<long double>(n) * std::abs(p) / std::abs(dp);
        long double a = std::abs(z);
        long double zlo = std::max(0.0L, a - rad), zhi = a + rad;
        lo += zlo > 1.0L ? std::log(zlo) : 0.0L;
        hi += zhi > 1.0L ? std::log(zhi) : 0.0L;
    }
    long double loglead = static_cast<long double>(log_bigint(abs(lead)));
    long double vlo = (loglead + lo) / n, vhi = (loglead + hi) / n;
    if (static_cast<double>(vhi - vlo) > tol)
        fail("nonconvergence", "root enclosure wider than tolerance");
    double value = static_cast<double>((vlo + vhi) / 2.0L);
    if (value < 0 && value > -tol) value = 0.0;
    return {value, std::make_pair(static_cast<double>(vlo), static_cast<double>(vhi))};
}

double bound_eval_height(double h_poly, const std::vector<EvalBlock>& blocks) {
    double b = h_poly;
    for (const auto& blk : blocks) {
        if (blk.degree < 0) fail("hypothesis-violated", "block degree must be >= 0");
        b = up(b + blk.size * std::log(blk.degree + 1.0));
        b = up(b + blk.degree * blk.height);
    }
    return b;
}

double bound_monic_from_roots(const std::vector<double>& root_heights, int d) {
    if (static_cast<int>(root_heights.size()) != d)
        fail("hypothesis-violated", "need one root height per degree");
    double b = 0;
    for (double h : root_heights) b = up(b + h);
    return up(b + d * std::log(2.0));
}

double bound_root_height(double h_poly) {
    if (h_poly < 0) fail("hypothesis-violated", "polynomial height must be >= 0");
    return up(h_poly + std::log(2.0));
}

double bound_interp_poly(const InterpBoundParams& p) {
    if (p.N <= p.d) fail("hypothesis-violated", "N >= d+1 required");
    if (p.D() < 1) fail("hypothesis-violated", "D >= 1 required");
    double b = static_cast<double>(p.N) / static_cast<double>(p.N - p.d) * p.H;
    b = up(b + static_cast<double>(p.D()) * std::log(static_cast<double>(p.D())));
    b = up(b + p.d * std::log(2.0 * static_cast<double>(p.M())));
    return up(b + std::log(p.d + 1.0));
}

double bound_interp_frac(const InterpBoundParams& p) {
    double M = static_cast<double>(p.M());
    double D = static_cast<double>(p.D());
    if (p.eta < 1) fail("hypothesis-violated", "eta >= 1 required");
    if (p.H < std::max(4.0, std::log(2.0 * M)))
        fail("hypothesis-violated", "H >= max{4, log(2M)} required");
    if (static_cast<double>(p.N) < D / p.eta)
        fail("hypothesis-violated", "at least D/eta evaluation points required");
    if (D < p.eta * std::pow(p.d, 3) * p.H)
        fail("hypothesis-violated", "D >= eta d^3 H required");
    if (D < 4.0 * p.eta * p.d * p.d_L)
        fail("hypothesis-violated", "D >= 4 eta d [L:Q] required");
    double b = p.H;
    b = up(b + p.C_L * p.eta * p.d * std::log(p.eta * p.d * p.H));
    b = up(b + p.d * std::log(2.0 * M));
    return up(b + std::log(p.d + 1.0));
}

} // namespace modeq
