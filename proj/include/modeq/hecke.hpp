#ifndef MODEQ_HECKE_HPP
#define MODEQ_HECKE_HPP

#include <string>
#include <variant>

#include "modeq/rational.hpp"

namespace modeq {

// The three concrete correspondence families: level-1 elliptic curves, the
// Siegel threefold in Igusa invariants, and the Hilbert surface for Q(sqrt5)
// in Gundlach invariants (beta = a + b*phi on the basis (1, phi)).
struct EllipticLevel1 {
    long l; // prime
};
struct SiegelIgusa {
    long l; // prime
};
struct HilbertGundlachQ5 {
    long a;
    long b;
};

class HeckeFamily {
public:
    using Kind = std::variant<EllipticLevel1, SiegelIgusa, HilbertGundlachQ5>;

    static HeckeFamily elliptic(long l);
    static HeckeFamily siegel(long l);
    static HeckeFamily hilbert_q5(long a, long b);

    const Kind& kind() const { return kind_; }
    bool is_elliptic() const { return std::holds_alternative<EllipticLevel1>(kind_); }
    bool is_siegel() const { return std::holds_alternative<SiegelIgusa>(kind_); }
    bool is_hilbert() const { return std::holds_alternative<HilbertGundlachQ5>(kind_); }

    int invariant_count() const; // n: 1 elliptic, 3 Siegel, 2 Hilbert
    int sigma_order() const;     // #Sigma: 2 for Hilbert, else 1
    std::string name() const;
    std::string level_string() const;

private:
    explicit HeckeFamily(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

struct QuadraticNormResult {
    long long norm;        // a^2 + ab - b^2
    bool totally_positive; // both real embeddings positive
    bool prime_element;    // beta prime in Z[phi]
};

QuadraticNormResult quadratic_norm(long a, long b);

// d(delta): l+1 / l^3+l^2+l+1 / N(beta)+1
BigInt hecke_degree(const HeckeFamily& fam);
// l(delta): l / l^2 / N(beta)
BigInt isogeny_degree(const HeckeFamily& fam);

// Weight of the common denominator form of Psi_{delta,m}.
BigInt denominator_weight(const HeckeFamily& fam, int m);

struct DegreeRatioBound {
    BigInt bound; // (N_level * l)^(dimV^2)
    bool ok;      // d <= bound
};

DegreeRatioBound degree_ratio_bound(const BigInt& n_level, int dim_v, const BigInt& l,
                                    const BigInt& d);

bool is_prime_u64(unsigned long long n);

} // namespace modeq

#endif
