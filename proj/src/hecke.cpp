#include "modeq/hecke.hpp"

#include <cmath>
#include <cstdlib>

#include "modeq/error.hpp"

namespace modeq {

namespace {

unsigned long long mulmod_u64(unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>((__uint128_t)a * b % m);
}

unsigned long long powmod_u64(unsigned long long b, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin below 2^64.
bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                                 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                                 29ull, 31ull, 37ull}) {
        unsigned long long x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

QuadraticNormResult quadratic_norm(long a, long b) {
    if (a == 0 && b == 0) fail("invalid-level", "quadratic_norm of 0");
    long long n = (long long)a * a + (long long)a * b - (long long)b * b;
    // a + b(1 +- sqrt5)/2 > 0 for both signs iff 2a+b > 0 and (2a+b)^2 > 5b^2.
    long long t = 2ll * a + b;
    bool tp = t > 0 && t * t > 5ll * b * b;
    bool prime = false;
    unsigned long long an = static_cast<unsigned long long>(n < 0 ? -n : n);
    if (is_prime_u64(an)) {
        prime = true;
    } else {
        unsigned long long r = static_cast<unsigned long long>(std::sqrt((double)an));
        while (r * r > an) --r;
        while ((r + 1) * (r + 1) <= an) ++r;
        // |N| = p^2 with p inert (p = +-2 mod 5)
        if (r * r == an && is_prime_u64(r) && (r % 5 == 2 || r % 5 == 3)) prime = true;
    }
    return {n, tp, prime};
}

HeckeFamily HeckeFamily::elliptic(long l) {
    if (l < 2 || !is_prime_u64(static_cast<unsigned long long>(l)))
        fail("invalid-level", "elliptic level must be prime");
    return HeckeFamily(Kind{EllipticLevel1{l}});
}

HeckeFamily HeckeFamily::siegel(long l) {
    if (l < 2 || !is_prime_u64(static_cast<unsigned long long>(l)))
        fail("invalid-level", "Siegel level must be prime");
    return HeckeFamily(Kind{SiegelIgusa{l}});
}

HeckeFamily HeckeFamily::hilbert_q5(long a, long b) {
    QuadraticNormResult q = quadratic_norm(a, b);
    if (!q.totally_positive || !q.prime_element)
        fail("invalid-level", "Hilbert level must be totally positive and prime");
    return HeckeFamily(Kind{HilbertGundlachQ5{a, b}});
}

int HeckeFamily::invariant_count() const {
    if (is_elliptic()) return 1;
    if (is_siegel()) return 3;
    return 2;
}

int HeckeFamily::sigma_order() const { return is_hilbert() ? 2 : 1; }

std::string HeckeFamily::name() const {
    if (is_elliptic()) return "elliptic";
    if (is_siegel()) return "siegel";
    return "hilbert";
}

std::string HeckeFamily::level_string() const {
    if (is_elliptic()) return std::to_string(std::get<EllipticLevel1>(kind_).l);
    if (is_siegel()) return std::to_string(std::get<SiegelIgusa>(kind_).l);
    const auto& h = std::get<HilbertGundlachQ5>(kind_);
    return std::to_string(h.a) + "," + std::to_string(h.b);
}

BigInt hecke_degree(const HeckeFamily& fam) {
    if (fam.is_elliptic()) return BigInt(std::get<EllipticLevel1>(fam.kind()).l) + 1;
    if (fam.is_siegel()) {
        BigInt l(std::get<SiegelIgusa>(fam.kind()).l);
        return l * l * l + l * l + l + 1;
    }
    const auto& h = std::get<HilbertGundlachQ5>(fam.kind());
    return BigInt(static_cast<long>(quadratic_norm(h.a, h.b).norm)) + 1;
}

BigInt isogeny_degree(const HeckeFamily& fam) {
    if (fam.is_elliptic()) return BigInt(std::get<EllipticLevel1>(fam.kind()).l);
    if (fam.is_siegel()) {
        BigInt l(std::get<SiegelIgusa>(fam.kind()).l);
        return l * l;
    }
    const auto& h = std::get<HilbertGundlachQ5>(fam.kind());
    return BigInt(static_cast<long>(quadratic_norm(h.a, h.b).norm));
}

BigInt denominator_weight(const HeckeFamily& fam, int m) {
    BigInt d = hecke_degree(fam);
    if (fam.is_elliptic()) {
        if (m != 1) fail("out-of-range", "elliptic modular equations have m = 1");
        return 12 * d; // chi = Delta
    }
    if (fam.is_siegel()) {
        if (m < 1 || m > 3) fail("out-of-range", "Siegel modular equations have 1 <= m <= 3");
        return (m == 1 ? 10 : 20) * d; // chi = I10, alpha = (1, 2, 2)
    }
    if (m < 1 || m > 2) fail("out-of-range", "Hilbert modular equations have 1 <= m <= 2");
    return 20 * d; // #Sigma = 2, chi = F10, alpha = 1
}

DegreeRatioBound degree_ratio_bound(const BigInt& n_level, int dim_v, const BigInt& l,
                                    const BigInt& d) {
    if (n_level <= 0 || dim_v <= 0 || l <= 0 || d <= 0)
        fail("invalid-level", "degree_ratio_bound needs positive inputs");
    BigInt base = n_level * l;
    BigInt bound;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(dim_v) * static_cast<unsigned long>(dim_v));
    return {bound, d <= bound};
}

} // namespace modeq
