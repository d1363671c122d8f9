#ifndef MODEQ_GRADED_HPP
#define MODEQ_GRADED_HPP

#include <optional>
#include <string>
#include <vector>

#include "modeq/mpoly.hpp"
#include "modeq/ratfrac.hpp"

namespace modeq {

// One rewriting relation per generator index k < r: the identity
// xi_k * f_k^beta_k / lambda_k = P_k(j) / Q_k(j) between weight-0 functions.
// xi_k and lambda_k are monomials in the generators f_{k+1}, ..., f_r.
struct GradedRelation {
    int beta = 1;
    MPoly::Exponents xi;     // exponent vector over the generators
    MPoly::Exponents lambda; // exponent vector over the generators
    MPoly P;                 // polynomial in the invariant variables
    MPoly Q;                 // polynomial in the invariant variables
};

enum class GcCase { case1, case2 };

// A graded ring of modular forms presented by generators with weights,
// invariant functions given as weight-0 quotients of the generators, the
// rewriting relations of the complexity definition, and the minimal
// relation E satisfied by the last invariant.
class GradedPresentation {
public:
    struct Generator {
        std::string name;
        int weight;
    };
    struct Invariant {
        std::string name;
        MPoly num; // monomials/polynomials in the generator variables
        MPoly den;
    };

    GradedPresentation(std::vector<Generator> gens, std::vector<Invariant> invariants,
                       std::vector<GradedRelation> relations, MPoly relation_poly,
                       GcCase case_tag,
                       // Optional elimination of dependent generators used
                       // when the generators are not free (each entry maps a
                       // generator to its expression in the others).
                       std::vector<std::optional<RatFrac>> elimination = {});

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Invariant>& invariants() const { return invs_; }
    const std::vector<GradedRelation>& relations() const { return rels_; }
    const MPoly& relation_poly() const { return E_; }
    GcCase case_tag() const { return case_; }
    const std::vector<std::optional<RatFrac>>& eliminations() const { return elim_; }

    int rank() const { return static_cast<int>(gens_.size()); }
    int weight_of(std::size_t k) const { return gens_[k].weight; }
    int weight_of_monomial(const MPoly::Exponents& e) const;

    const std::vector<std::string>& gen_vars() const { return gen_vars_; }
    // Invariant variables J_1..J_{n+1}; the last one is the distinguished
    // invariant of the relation E (constant 1 for purely transcendental
    // presentations).
    const std::vector<std::string>& inv_vars() const { return inv_vars_; }

    int e_degree() const;   // degree of E in the last invariant
    int dE_degree() const;  // total degree of E in the other invariants

    // Substitutes the invariant definitions into a polynomial in the
    // invariant variables, as an exact fraction of generator polynomials.
    RatFrac invariants_substituted(const MPoly& poly_in_J) const;

    // Applies the generator elimination (if any) to a generator polynomial,
    // producing a fraction in the free generators.
    RatFrac eliminate(const MPoly& poly_in_gens) const;

private:
    void validate() const;

    std::vector<Generator> gens_;
    std::vector<Invariant> invs_;
    std::vector<GradedRelation> rels_;
    MPoly E_;
    GcCase case_;
    std::vector<std::optional<RatFrac>> elim_;
    std::vector<std::string> gen_vars_;
    std::vector<std::string> inv_vars_;
};

// Homogeneous polynomial in the generators with a declared weight; the
// constructor rejects non-homogeneous input.
class GradedPoly {
public:
    GradedPoly(const GradedPresentation& pres, MPoly terms, int weight);

    const MPoly& terms() const { return terms_; }
    int weight() const { return weight_; }
    const GradedPresentation& presentation() const { return *pres_; }

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;

private:
    const GradedPresentation* pres_;
    MPoly terms_;
    int weight_;
};

// beta_k = g_k / gcd(w_k, g_k) with g_k = gcd(w_{k+1}, ..., w_r).
std::vector<int> beta_exponents(const std::vector<int>& weights);

// Symmetric geometric complexity of the presentation (exact).
BigRat sgc(const GradedPresentation& pres);
// Geometric complexity: (e + 2 d_E) SGC + e - 1.
BigRat gc(const GradedPresentation& pres);

// Rewrite f/g (equal-weight forms, g nonzero) as a fraction of invariants.
// The output degrees are at most ceil(SGC * weight) and the denominator
// depends only on g.
RatFrac rewrite_case1(const GradedPoly& f, const GradedPoly& g);
RatFrac rewrite_case2(const GradedPoly& f, const GradedPoly& g);
// Dispatch on the presentation's case tag.
RatFrac rewrite(const GradedPoly& f, const GradedPoly& g);

// Canonical form of p/q modulo E: a polynomial of degree <= e-1 in the last
// variable with denominator free of it. Throws "resultant-zero" when q
// shares a factor with E.
RatFrac canonical_form(const MPoly& p, const MPoly& q, const MPoly& E);

// Checks result(j-definitions) = f/g exactly in the (free) generator ring.
bool verify_rewrite(const RatFrac& result, const GradedPoly& f, const GradedPoly& g);

struct BuiltinPresentations {
    GradedPresentation igusa;
    GradedPresentation gundlach_q5;
    GradedPresentation elliptic;
};

const BuiltinPresentations& builtin_presentations();
const GradedPresentation& builtin_presentation(const std::string& name);

} // namespace modeq

#endif
