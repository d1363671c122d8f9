#include "modeq/qexp.hpp"

#include <numeric>

#include <algorithm>
#include <sstream>

#include "modeq/hecke.hpp"

namespace modeq {

IntSeries IntSeries::one(long trunc) {
    IntSeries s(1, trunc);
    s.coeffs_[0] = 1;
    return s;
}

IntSeries IntSeries::term(int ram, long k, BigInt c, long trunc) {
    IntSeries s(ram, trunc);
    if (c != 0 && k < trunc) s.coeffs_[k] = std::move(c);
    return s;
}

long IntSeries::ord() const {
    if (coeffs_.empty()) fail("internal", "ord of the zero series");
    return coeffs_.begin()->first;
}

BigInt IntSeries::coeff(long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt IntSeries::coeff_q(long n) const { return coeff(n * ram_); }

void IntSeries::set(long k, BigInt c) {
    if (k >= trunc_) return;
    if (c == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = std::move(c);
}

namespace {

constexpr long kExactTrunc = 1L << 40;

// Common grid for two series; truncations are rescaled to it.
int common_ram(int a, int b) { return a / std::gcd(a, b) * b; }

} // namespace

IntSeries IntSeries::with_ram(int new_ram) const {
    if (new_ram == ram_) return *this;
    if (new_ram % ram_ != 0) fail("ramification", "grid refinement must be a multiple");
    long t = new_ram / ram_;
    IntSeries s(new_ram, trunc_ * t);
    for (const auto& [k, c] : coeffs_) s.coeffs_[k * t] = c;
    return s;
}

IntSeries IntSeries::operator+(const IntSeries& o) const {
    int r = common_ram(ram_, o.ram_);
    IntSeries a = with_ram(r), b = o.with_ram(r);
    IntSeries s(r, std::min(a.trunc_, b.trunc_));
    s.coeffs_ = a.coeffs_;
    for (const auto& [k, c] : b.coeffs_) {
        auto it = s.coeffs_.find(k);
        if (it == s.coeffs_.end())
            s.coeffs_[k] = c;
        else {
            it->second += c;
            if (it->second == 0) s.coeffs_.erase(it);
        }
    }
    s.coeffs_.erase(s.coeffs_.lower_bound(s.trunc_), s.coeffs_.end());
    return s;
}

IntSeries IntSeries::operator-() const {
    IntSeries s(ram_, trunc_);
    for (const auto& [k, c] : coeffs_) s.coeffs_[k] = -c;
    return s;
}

IntSeries IntSeries::operator-(const IntSeries& o) const { return *this + (-o); }

IntSeries IntSeries::operator*(const IntSeries& o) const {
    int r = common_ram(ram_, o.ram_);
    IntSeries a = with_ram(r), b = o.with_ram(r);
    // Exactness: a*b is exact below min(trunc_a + ord_b, trunc_b + ord_a).
    long t;
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        t = std::min(a.trunc_, b.trunc_);
        return IntSeries(r, t);
    }
    t = std::min(a.trunc_ + b.ord(), b.trunc_ + a.ord());
    IntSeries s(r, t);
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            long k = ka + kb;
            if (k >= t) break; // b.coeffs_ ordered ascending
            auto it = s.coeffs_.find(k);
            if (it == s.coeffs_.end()) {
                s.coeffs_[k] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) s.coeffs_.erase(it);
            }
        }
    }
    return s;
}

IntSeries IntSeries::operator*(const BigInt& c) const {
    IntSeries s(ram_, trunc_);
    if (c == 0) return s;
    for (const auto& [k, x] : coeffs_) s.coeffs_[k] = x * c;
    return s;
}

IntSeries IntSeries::pow(unsigned e) const {
    // The exact unit: truncation far beyond anything arising here, so the
    // min-truncation rule never charges for it.
    IntSeries acc(ram_, kExactTrunc);
    acc.coeffs_[0] = 1;
    IntSeries base = *this;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

IntSeries IntSeries::inverse() const {
    if (coeffs_.empty()) fail("zero-denominator", "inverse of the zero series");
    long m = ord();
    BigInt lead = coeffs_.begin()->second;
    if (lead != 1 && lead != -1)
        fail("nonzero-remainder", "integral series inverse needs unit leading coefficient");
    long n = trunc_ - m; // number of exact coefficients relative to the order
    // t = lead^{-1} q^{-m} * (1 + u)^{-1}
    IntSeries t(ram_, n - m);
    std::vector<BigInt> s(n, BigInt(0)), out(n, BigInt(0));
    for (const auto& [k, c] : coeffs_) {
        long i = k - m;
        if (i < n) s[i] = c;
    }
    out[0] = lead; // lead^{-1} = lead for units
    for (long i = 1; i < n; ++i) {
        BigInt acc(0);
        for (long j = 1; j <= i; ++j)
            if (s[j] != 0 && out[i - j] != 0) acc += s[j] * out[i - j];
        out[i] = -lead * acc; // divide by lead = multiply for units
    }
    for (long i = 0; i < n; ++i)
        if (out[i] != 0) t.coeffs_[i - m] = out[i];
    return t;
}

IntSeries IntSeries::scale_exponents(long t) const {
    if (t <= 0) fail("ramification", "exponent scale must be positive");
    IntSeries s(ram_, trunc_ * t);
    for (const auto& [k, c] : coeffs_) s.coeffs_[k * t] = c;
    return s;
}

IntSeries IntSeries::as_root_substitution(int l) const {
    if (l <= 0) fail("ramification", "root substitution needs l >= 1");
    IntSeries s(ram_ * l, trunc_);
    s.coeffs_ = coeffs_;
    return s;
}

IntSeries IntSeries::divexact(const BigInt& c) const {
    if (c == 0) fail("zero-denominator", "division by zero");
    IntSeries s(ram_, trunc_);
    for (const auto& [k, x] : coeffs_) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (r != 0) fail("nonzero-remainder", "inexact integer series division");
        s.coeffs_[k] = q;
    }
    return s;
}

IntSeries IntSeries::truncated(long new_trunc) const {
    IntSeries s(ram_, std::min(trunc_, new_trunc));
    for (const auto& [k, c] : coeffs_) {
        if (k < s.trunc_) s.coeffs_[k] = c;
    }
    return s;
}

std::string IntSeries::to_string(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (const auto& [k, c] : coeffs_) {
        if (shown++ >= max_terms) {
            os << " + ...";
            break;
        }
        if (shown > 1) os << " + ";
        os << c.get_str() << "*q^(" << k << "/" << ram_ << ")";
    }
    if (coeffs_.empty()) os << "0";
    os << " + O(q^(" << trunc_ << "/" << ram_ << "))";
    return os.str();
}

namespace {

// sigma_k(n) for small n
BigInt sigma(long n, int k) {
    BigInt s(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        BigInt dk(d), ek(n / d);
        mpz_pow_ui(dk.get_mpz_t(), BigInt(d).get_mpz_t(), k);
        mpz_pow_ui(ek.get_mpz_t(), BigInt(n / d).get_mpz_t(), k);
        s += dk;
        if (d != n / d) s += ek;
    }
    return s;
}

} // namespace

IntSeries eisenstein_e4(long T) {
    IntSeries s(1, T);
    s.set(0, 1);
    for (long n = 1; n < T; ++n) s.set(n, 240 * sigma(n, 3));
    return s;
}

IntSeries eisenstein_e6(long T) {
    IntSeries s(1, T);
    s.set(0, 1);
    for (long n = 1; n < T; ++n) s.set(n, -504 * sigma(n, 5));
    return s;
}

IntSeries delta_eta_product(long T) {
    // prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2} (pentagonal numbers)
    IntSeries p(1, T);
    for (long k = 0;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 >= T && e2 >= T) break;
        BigInt c = (k % 2 == 0) ? BigInt(1) : BigInt(-1);
        if (e1 < T) p.set(e1, p.coeff(e1) + c);
        if (k > 0 && e2 < T) p.set(e2, p.coeff(e2) + c);
    }
    IntSeries p24 = p.pow(24).truncated(T);
    return p24 * IntSeries::term(1, 1, BigInt(1), kExactTrunc);
}

IntSeries j_series(long T) {
    if (T < 2) fail("precision-insufficient", "j_series needs T >= 2");
    long work = T + 2;
    IntSeries e4 = eisenstein_e4(work);
    IntSeries delta = delta_eta_product(work);
    IntSeries inv = delta.inverse(); // q^{-1} (1 + ...)
    IntSeries j = (e4 * e4 * e4 * inv).truncated(T - 1);
    return j;
}

IntSeries u_operator(const IntSeries& s, int l) {
    if (l <= 0 || s.ram() % l != 0)
        fail("ramification", "u_operator needs l dividing the ramification");
    IntSeries out(s.ram() / l, (s.trunc() + l - 1) / l);
    for (const auto& [k, c] : s.coeffs()) {
        if (k % l == 0 && k / l < out.trunc()) out.set(k / l, c);
    }
    return out;
}

MPoly series_to_j_polynomial(const IntSeries& s, const IntSeries& j,
                             const std::vector<std::string>& out_vars,
                             const std::string& out_var) {
    if (s.ram() != 1 || j.ram() != 1)
        fail("ramification", "series_to_j_polynomial needs integer exponents");
    MPoly p(out_vars);
    MPoly x = MPoly::variable(out_vars, out_var);
    IntSeries rem = s;
    // j^k = q^{-k}(1 + ...): remove poles from the deepest up.
    while (!rem.is_zero() && rem.ord() < 0) {
        long k = -rem.ord();
        BigInt c = rem.coeff(rem.ord());
        rem = rem - j.pow(static_cast<unsigned>(k)) * c;
        p = p + x.pow(static_cast<unsigned>(k)) * BigRat(c);
        if (!rem.is_zero() && rem.ord() <= -k)
            fail("precision-insufficient", "pole order did not decrease");
    }
    if (!rem.is_zero() && rem.ord() == 0) {
        p = p + MPoly::constant(out_vars, BigRat(rem.coeff(0)));
        rem.set(0, BigInt(0));
    }
    if (rem.trunc() <= 0) fail("precision-insufficient", "series too short to certify reduction");
    if (!rem.is_zero()) fail("nonzero-remainder", "series is not a polynomial in j");
    return p;
}

MPoly phi_elliptic(long l, long t_margin) {
    if (l < 2 || !is_prime_u64(static_cast<unsigned long long>(l)))
        fail("invalid-level", "phi_elliptic needs a prime level");
    long T = l * (l + 2) + t_margin;
    IntSeries j = j_series(T);
    IntSeries j_l = j.scale_exponents(l); // j(q^l)

    // The l+1 conjugates are j(q^l) and the ramified family
    // j(zeta^k q^(1/l)), k = 0..l-1. Newton's identities run on the
    // ramified family alone: its power sums
    //   P_i = sum_k (j^i)(zeta^k q^(1/l)) = l * U_l((j^i)(q^(1/l)))
    // have pole order at most 1, so the truncation survives; the deep
    // j(q^l) pole enters exactly once at the end through
    //   e_m(all) = E_m + j(q^l) E_{m-1}.
    int n = static_cast<int>(l) + 1;
    std::vector<IntSeries> jpow{IntSeries::one(kExactTrunc)}, jlpow{IntSeries::one(kExactTrunc)};
    for (int m = 1; m <= n; ++m) {
        jpow.push_back(jpow.back() * j);
        jlpow.push_back(jlpow.back() * j_l);
    }
    std::vector<IntSeries> psums;
    for (int i = 1; i <= static_cast<int>(l); ++i)
        psums.push_back(
            u_operator(jpow[i].as_root_substitution(static_cast<int>(l)), static_cast<int>(l)) *
            BigInt(l));
    std::vector<IntSeries> esub{IntSeries::one(kExactTrunc)};
    for (int m = 1; m <= static_cast<int>(l); ++m) {
        IntSeries acc(1, kExactTrunc);
        for (int i = 1; i <= m; ++i) {
            IntSeries t = esub[m - i] * psums[i - 1];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        esub.push_back(acc.divexact(BigInt(m)));
    }
    std::vector<IntSeries> elem{IntSeries::one(kExactTrunc)};
    for (int m = 1; m <= n; ++m) {
        // E_{l+1} of the l ramified conjugates is zero
        IntSeries full = jlpow[1] * esub[m - 1];
        if (m <= static_cast<int>(l)) full = full + esub[m];
        elem.push_back(full);
    }

    std::vector<std::string> vars{"X", "Y"};
    MPoly phi(vars);
    MPoly Y = MPoly::variable(vars, "Y");
    for (int m = 0; m <= n; ++m) {
        MPoly em;
        if (m == 0) {
            em = MPoly::constant(vars, BigRat(1));
        } else {
            try {
                em = series_to_j_polynomial(elem[m], j, vars, "X");
            } catch (const Error& e) {
                fail("precision-insufficient",
                     std::string("pole-order reduction of e_") + std::to_string(m) +
                         " failed: " + e.what());
            }
        }
        MPoly term = em * Y.pow(static_cast<unsigned>(n - m));
        phi = (m % 2 == 0) ? phi + term : phi - term;
    }

    // Structural guarantees: integral, monic of degree l+1, symmetric.
    if (!phi.has_integer_coeffs()) fail("precision-insufficient", "Phi has non-integer coefficients");
    if (phi.degree_in("Y") != n || phi.degree_in("X") != n)
        fail("precision-insufficient", "Phi degree is not l+1");
    MPoly::Exponents top{0, static_cast<std::uint32_t>(n)};
    if (phi.terms().find(top) == phi.terms().end() || phi.terms().at(top) != 1)
        fail("precision-insufficient", "Phi is not monic in Y");
    MPoly flipped(vars);
    for (const auto& [e, c] : phi.terms()) flipped.add_term({e[1], e[0]}, c);
    if (flipped != phi) fail("precision-insufficient", "Phi is not symmetric");

    // Kernel identity Phi(j(q^l), j(q)) = 0 through the truncation.
    {
        IntSeries acc(1, kExactTrunc);
        for (const auto& [e, c] : phi.terms())
            acc = acc + jlpow[e[0]] * jpow[e[1]] * BigInt(c.get_num());
        if (acc.trunc() <= 0 || !acc.is_zero())
            fail("precision-insufficient", "kernel identity fails at the working precision");
    }
    return phi;
}

} // namespace modeq
