#include "modeq/resultant.hpp"

#include <algorithm>
#include <utility>

namespace modeq {

namespace {

// Univariate view in the active variable: entry i is the coefficient of
// var^i, an MPoly over the full variable list with the active exponent zero.
struct UPoly {
    std::vector<std::string> vars;
    std::vector<MPoly> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const MPoly& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UPoly to_upoly(const MPoly& p, std::size_t var) {
    UPoly u;
    u.vars = p.vars();
    u.c = p.univariate_coeffs(var);
    u.trim();
    return u;
}

UPoly upoly_const(const std::vector<std::string>& vars, MPoly value) {
    UPoly u;
    u.vars = vars;
    if (!value.is_zero()) u.c.push_back(std::move(value));
    return u;
}

MPoly from_upoly(const UPoly& u, std::size_t var) {
    MPoly r(u.vars);
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        MPoly::Exponents e(u.vars.size(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        r = r + u.c[i] * MPoly::monomial(u.vars, e, BigRat(1));
    }
    return r;
}

UPoly mul_scalar(const UPoly& a, const MPoly& s) {
    UPoly r;
    r.vars = a.vars;
    if (s.is_zero()) return r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(x * s);
    r.trim();
    return r;
}

// a - s * var^shift * b
UPoly sub_shifted(const UPoly& a, const MPoly& s, int shift, const UPoly& b) {
    UPoly r = a;
    std::size_t need = b.c.size() + static_cast<std::size_t>(shift);
    if (r.c.size() < need) r.c.resize(need, MPoly(a.vars));
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[i + shift] = r.c[i + shift] - s * b.c[i];
    r.trim();
    return r;
}

UPoly exact_div_scalar(const UPoly& a, const MPoly& s) {
    UPoly r;
    r.vars = a.vars;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) {
        auto q = x.exact_div(s);
        if (!q) fail("internal", "inexact division in subresultant sequence");
        r.c.push_back(std::move(*q));
    }
    r.trim();
    return r;
}

// PRS element together with cofactors against the two original inputs.
struct Tracked {
    UPoly a, u, v;
};

// Fraction-free pseudo-remainder with cofactor tracking:
// returns lc(B)^(deg A - deg B + 1) * A  mod B, componentwise on (a, u, v).
Tracked prem_tracked(Tracked A, const Tracked& B) {
    int db = B.a.deg();
    const MPoly& lb = B.a.lc();
    int e = A.a.deg() - db + 1;
    while (!A.a.zero() && A.a.deg() >= db) {
        MPoly top = A.a.lc();
        int shift = A.a.deg() - db;
        A.a = sub_shifted(mul_scalar(A.a, lb), top, shift, B.a);
        A.u = sub_shifted(mul_scalar(A.u, lb), top, shift, B.u);
        A.v = sub_shifted(mul_scalar(A.v, lb), top, shift, B.v);
        --e;
    }
    if (e > 0) {
        MPoly f = lb.pow(static_cast<unsigned>(e));
        A.a = mul_scalar(A.a, f);
        A.u = mul_scalar(A.u, f);
        A.v = mul_scalar(A.v, f);
    }
    return A;
}

struct PrsResult {
    MPoly z;          // the resultant
    UPoly u, v;       // cofactors: u*q + v*e = z
    bool deg_q_ge_1;
};

// Subresultant PRS (Cohen, Alg. 3.3.7, without content extraction), with
// cofactor tracking. Inputs must both be nonzero with deg A >= deg B >= 1
// after the caller's normalization; sign s accounts for any swap.
PrsResult subresultant_prs(Tracked A, Tracked B, int sign, std::size_t var) {
    const std::vector<std::string>& vars = A.a.vars;
    MPoly one = MPoly::constant(vars, BigRat(1));
    MPoly g = one, h = one;
    while (true) {
        int da = A.a.deg(), db = B.a.deg();
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        Tracked R = prem_tracked(A, B);
        if (R.a.zero()) {
            // positive-degree common factor: resultant is 0
            return {MPoly(vars), upoly_const(vars, MPoly(vars)), upoly_const(vars, MPoly(vars)),
                    true};
        }
        A = std::move(B);
        MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        B.a = exact_div_scalar(R.a, divisor);
        B.u = exact_div_scalar(R.u, divisor);
        B.v = exact_div_scalar(R.v, divisor);
        g = A.a.lc();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            auto q = g.pow(static_cast<unsigned>(delta)).exact_div(h.pow(static_cast<unsigned>(delta - 1)));
            if (!q) fail("internal", "inexact h update in subresultant sequence");
            h = *q;
        }
        if (B.a.deg() <= 0) break;
    }
    if (B.a.zero())
        return {MPoly(vars), upoly_const(vars, MPoly(vars)), upoly_const(vars, MPoly(vars)), true};
    // Last element has degree 0; fold the defective-step correction in.
    int dA = A.a.deg();
    MPoly b0 = B.a.c[0];
    MPoly z;
    {
        auto q = b0.pow(static_cast<unsigned>(dA)).exact_div(h.pow(static_cast<unsigned>(dA - 1)));
        if (!q) fail("internal", "inexact final division in subresultant sequence");
        z = sign < 0 ? -*q : *q;
    }
    // Rescale cofactors from (u*q + v*e = b0) to (u*q + v*e = z); the
    // division by b0 is exact because both cofactor pairs are the canonical
    // Bezout pair for their right-hand side.
    UPoly u = exact_div_scalar(mul_scalar(B.u, z), b0);
    UPoly v = exact_div_scalar(mul_scalar(B.v, z), b0);
    (void)var;
    return {std::move(z), std::move(u), std::move(v), true};
}

} // namespace

MPoly resultant(const MPoly& a, const MPoly& b, const std::string& var) {
    if (a.vars() != b.vars()) fail("variable-mismatch", "resultant operands differ in variables");
    std::size_t vi = a.var_index(var);
    UPoly A = to_upoly(a, vi), B = to_upoly(b, vi);
    int da = A.deg(), db = B.deg();
    if (da <= 0 && db <= 0)
        fail("both-constant-in-var", "resultant needs positive degree in " + var);
    if (A.zero() || B.zero()) return MPoly(a.vars());
    int sign = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) sign = -sign;
    }
    if (db == 0) {
        MPoly z = B.c[0].pow(static_cast<unsigned>(da));
        return sign < 0 ? -z : z;
    }
    Tracked TA{A, upoly_const(a.vars(), MPoly::constant(a.vars(), BigRat(1))),
               upoly_const(a.vars(), MPoly(a.vars()))};
    Tracked TB{B, upoly_const(a.vars(), MPoly(a.vars())),
               upoly_const(a.vars(), MPoly::constant(a.vars(), BigRat(1)))};
    return subresultant_prs(std::move(TA), std::move(TB), sign, vi).z;
}

BezoutResult bezout(const MPoly& q, const MPoly& e, const std::string& var) {
    if (q.vars() != e.vars()) fail("variable-mismatch", "bezout operands differ in variables");
    std::size_t vi = q.var_index(var);
    UPoly Q = to_upoly(q, vi), E = to_upoly(e, vi);
    if (E.deg() < 1) fail("both-constant-in-var", "bezout needs positive degree of e in " + var);
    const auto& vars = q.vars();
    MPoly one = MPoly::constant(vars, BigRat(1));
    MPoly zero(vars);
    if (Q.zero()) return {zero, zero, zero};
    if (Q.deg() == 0) {
        // res(q, e) = q^deg(e); u = q^(deg e - 1), v = 0
        MPoly z = Q.c[0].pow(static_cast<unsigned>(E.deg()));
        MPoly u = Q.c[0].pow(static_cast<unsigned>(E.deg() - 1));
        return {u, zero, z};
    }
    int sign = 1;
    Tracked TQ{Q, upoly_const(vars, one), upoly_const(vars, zero)};
    Tracked TE{E, upoly_const(vars, zero), upoly_const(vars, one)};
    PrsResult r;
    if (Q.deg() >= E.deg()) {
        r = subresultant_prs(std::move(TQ), std::move(TE), sign, vi);
    } else {
        if ((Q.deg() & 1) && (E.deg() & 1)) sign = -sign;
        r = subresultant_prs(std::move(TE), std::move(TQ), sign, vi);
    }
    BezoutResult out{from_upoly(r.u, vi), from_upoly(r.v, vi), r.z};
    if (out.z.is_zero()) return {zero, zero, MPoly(vars)};
    if (r.u.deg() >= E.deg())
        fail("internal", "bezout cofactor degree bound violated");
    return out;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, const std::string& var) {
    if (a.vars() != b.vars()) fail("variable-mismatch", "prem operands differ in variables");
    std::size_t vi = a.var_index(var);
    UPoly A = to_upoly(a, vi), B = to_upoly(b, vi);
    if (B.zero()) fail("zero-denominator", "pseudo-remainder by zero");
    if (A.deg() < B.deg()) return a;
    Tracked TA{A, upoly_const(a.vars(), MPoly(a.vars())), upoly_const(a.vars(), MPoly(a.vars()))};
    Tracked TB{B, upoly_const(a.vars(), MPoly(a.vars())), upoly_const(a.vars(), MPoly(a.vars()))};
    return from_upoly(prem_tracked(std::move(TA), TB).a, vi);
}

MPoly gcd_univariate(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars()) fail("variable-mismatch", "gcd operands differ in variables");
    // Identify the single variable actually used.
    std::size_t used = a.vars().size();
    for (std::size_t i = 0; i < a.vars().size(); ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            if (used != a.vars().size())
                fail("multivariate-input", "gcd_univariate needs univariate input");
            used = i;
        }
    }
    auto monic = [&](const MPoly& p, std::size_t var) {
        if (p.is_zero()) return p;
        MPoly lead = p.coeff_of(var, static_cast<unsigned>(p.degree_in(var)));
        return p * (BigRat(1) / lead.constant_value());
    };
    if (used == a.vars().size()) {
        // both constant
        if (a.is_zero() && b.is_zero()) return a;
        return MPoly::constant(a.vars(), BigRat(1));
    }
    if (a.is_zero()) return monic(b, used);
    if (b.is_zero()) return monic(a, used);
    std::vector<BigRat> A = [&] {
        std::vector<BigRat> v;
        for (auto& m : a.univariate_coeffs(used)) v.push_back(m.constant_value());
        return v;
    }();
    std::vector<BigRat> B = [&] {
        std::vector<BigRat> v;
        for (auto& m : b.univariate_coeffs(used)) v.push_back(m.constant_value());
        return v;
    }();
    auto deg = [](const std::vector<BigRat>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<BigRat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(A);
    trim(B);
    while (!B.empty()) {
        // A mod B
        while (deg(A) >= deg(B) && !A.empty()) {
            BigRat f = A.back() / B.back();
            int shift = deg(A) - deg(B);
            for (std::size_t i = 0; i < B.size(); ++i)
                A[i + shift] -= f * B[i];
            trim(A);
        }
        std::swap(A, B);
    }
    MPoly g(a.vars());
    for (std::size_t i = 0; i < A.size(); ++i) {
        MPoly::Exponents e(a.vars().size(), 0);
        e[used] = static_cast<std::uint32_t>(i);
        g.add_term(e, A[i]);
    }
    return monic(g, used);
}

} // namespace modeq
