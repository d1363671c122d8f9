#include "modeq/graded.hpp"

#include <algorithm>
#include <numeric>

#include "modeq/resultant.hpp"

namespace modeq {

namespace {

int ceil_rat(const BigRat& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return static_cast<int>(q.get_si());
}

// Exact evaluation of a polynomial at fraction values over one common
// denominator (product of the value denominators at their maximal degrees).
RatFrac evaluate_at_fractions(const MPoly& p, const std::vector<RatFrac>& values) {
    if (values.empty()) fail("variable-mismatch", "no substitution values");
    const std::vector<std::string>& tvars = values[0].num().vars();
    if (p.vars().size() != values.size())
        fail("variable-mismatch", "substitution must map every variable");
    std::vector<unsigned> maxdeg(values.size(), 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);

    // Power tables for numerators and denominators.
    std::vector<std::vector<MPoly>> npow(values.size()), dpow(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        npow[i].push_back(MPoly::constant(tvars, BigRat(1)));
        dpow[i].push_back(MPoly::constant(tvars, BigRat(1)));
        for (unsigned k = 1; k <= maxdeg[i]; ++k) {
            npow[i].push_back(npow[i].back() * values[i].num());
            dpow[i].push_back(dpow[i].back() * values[i].den());
        }
    }
    MPoly den = MPoly::constant(tvars, BigRat(1));
    for (std::size_t i = 0; i < values.size(); ++i) den = den * dpow[i][maxdeg[i]];
    MPoly num(tvars);
    for (const auto& [e, c] : p.terms()) {
        MPoly t = MPoly::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            t = t * npow[i][e[i]];
            t = t * dpow[i][maxdeg[i] - e[i]];
        }
        num = num + t;
    }
    return RatFrac(std::move(num), std::move(den));
}

} // namespace

GradedPresentation::GradedPresentation(std::vector<Generator> gens,
                                       std::vector<Invariant> invariants,
                                       std::vector<GradedRelation> relations, MPoly relation_poly,
                                       GcCase case_tag,
                                       std::vector<std::optional<RatFrac>> elimination)
    : gens_(std::move(gens)),
      invs_(std::move(invariants)),
      rels_(std::move(relations)),
      E_(std::move(relation_poly)),
      case_(case_tag),
      elim_(std::move(elimination)) {
    for (const auto& g : gens_) gen_vars_.push_back(g.name);
    inv_vars_ = E_.vars();
    if (elim_.empty()) elim_.assign(gens_.size(), std::nullopt);
    validate();
}

int GradedPresentation::weight_of_monomial(const MPoly::Exponents& e) const {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(e[i]) * gens_[i].weight;
    return w;
}

int GradedPresentation::e_degree() const {
    return std::max(0, E_.degree_in(inv_vars_.size() - 1));
}

int GradedPresentation::dE_degree() const {
    int d = 0;
    std::size_t last = inv_vars_.size() - 1;
    for (const auto& [e, c] : E_.terms()) {
        int sum = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != last) sum += static_cast<int>(e[i]);
        d = std::max(d, sum);
    }
    return d;
}

RatFrac GradedPresentation::invariants_substituted(const MPoly& poly_in_J) const {
    std::vector<RatFrac> values;
    for (const auto& inv : invs_) values.emplace_back(inv.num, inv.den);
    MPoly one = MPoly::constant(gen_vars_, BigRat(1));
    while (values.size() < inv_vars_.size()) values.emplace_back(one, one);
    return evaluate_at_fractions(poly_in_J, values);
}

RatFrac GradedPresentation::eliminate(const MPoly& poly_in_gens) const {
    bool any = std::any_of(elim_.begin(), elim_.end(), [](const auto& x) { return x.has_value(); });
    if (!any) return RatFrac::from_poly(poly_in_gens);
    std::vector<RatFrac> values;
    MPoly one = MPoly::constant(gen_vars_, BigRat(1));
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (elim_[i]) {
            values.push_back(*elim_[i]);
        } else {
            values.emplace_back(MPoly::variable(gen_vars_, gens_[i].name), one);
        }
    }
    return evaluate_at_fractions(poly_in_gens, values);
}

namespace {

RatFrac eliminate_frac(const GradedPresentation& pres, const RatFrac& f) {
    RatFrac n = pres.eliminate(f.num());
    RatFrac d = pres.eliminate(f.den());
    return RatFrac(n.num() * d.den(), n.den() * d.num());
}

bool homogeneous_weight(const GradedPresentation& pres, const MPoly& p, int* weight_out) {
    bool first = true;
    int w = 0;
    for (const auto& [e, c] : p.terms()) {
        int t = pres.weight_of_monomial(e);
        if (first) {
            w = t;
            first = false;
        } else if (t != w) {
            return false;
        }
    }
    if (weight_out) *weight_out = first ? 0 : w;
    return true;
}

} // namespace

void GradedPresentation::validate() const {
    int r = rank();
    if (r < 2) fail("malformed-presentation", "need at least 2 generators");
    for (const auto& g : gens_)
        if (g.weight <= 0) fail("malformed-presentation", "generator weights must be positive");
    if (static_cast<int>(rels_.size()) != r - 1)
        fail("malformed-presentation", "need exactly r-1 relations");
    if (invs_.size() + 1 != inv_vars_.size() && invs_.size() != inv_vars_.size())
        fail("malformed-presentation", "invariant count does not match the relation variables");

    std::vector<int> weights;
    for (const auto& g : gens_) weights.push_back(g.weight);
    std::vector<int> beta = beta_exponents(weights);

    // Invariant definitions are weight-0 quotients.
    for (const auto& inv : invs_) {
        int wn = 0, wd = 0;
        if (!homogeneous_weight(*this, inv.num, &wn) || !homogeneous_weight(*this, inv.den, &wd) ||
            wn != wd || inv.den.is_zero())
            fail("malformed-presentation", "invariant " + inv.name + " is not a weight-0 quotient");
    }

    for (int k = 0; k + 1 < r; ++k) {
        const GradedRelation& rel = rels_[k];
        if (rel.beta != beta[k])
            fail("malformed-presentation", "beta exponent mismatch at relation " + std::to_string(k + 1));
        int wxi = weight_of_monomial(rel.xi);
        int wlam = weight_of_monomial(rel.lambda);
        if (wlam - wxi != rel.beta * gens_[k].weight)
            fail("malformed-presentation",
                 "wt(lambda) - wt(xi) != beta*w at relation " + std::to_string(k + 1));
        for (int i = 0; i <= k; ++i)
            if (rel.xi[i] != 0 || rel.lambda[i] != 0)
                fail("malformed-presentation",
                     "xi/lambda must lie in the later generators at relation " + std::to_string(k + 1));
        if (case_ == GcCase::case1) {
            for (int i = 0; i < r; ++i) {
                if (i != r - 1 && rel.lambda[i] != 0)
                    fail("malformed-presentation", "case 1 requires lambda a power of the last generator");
                if (i != r - 2 && rel.xi[i] != 0)
                    fail("malformed-presentation",
                         "case 1 requires xi a power of the next-to-last generator");
            }
            if (!rel.Q.is_constant() || rel.Q.constant_value() != 1)
                fail("malformed-presentation", "case 1 requires Q_k = 1");
            if (k == r - 2 && rel.xi[r - 2] != 0)
                fail("malformed-presentation", "case 1 requires xi_{r-1} = 1");
        }
        if (rel.Q.is_zero())
            fail("malformed-presentation", "Q_k must be nonzero");

        // Defining identity xi f^beta / lambda = P(j)/Q(j), checked in the
        // free generators (after eliminating dependent ones).
        MPoly fk_pow = MPoly::variable(gen_vars_, gens_[k].name).pow(static_cast<unsigned>(rel.beta));
        MPoly lhs_num = MPoly::monomial(gen_vars_, rel.xi, BigRat(1)) * fk_pow;
        MPoly lhs_den = MPoly::monomial(gen_vars_, rel.lambda, BigRat(1));
        RatFrac lhs = eliminate_frac(*this, RatFrac(lhs_num, lhs_den));
        RatFrac Pj = eliminate_frac(*this, invariants_substituted(rel.P));
        RatFrac Qj = eliminate_frac(*this, invariants_substituted(rel.Q));
        MPoly left = lhs.num() * Pj.den() * Qj.num();
        MPoly right = lhs.den() * Pj.num() * Qj.den();
        if (left != right)
            fail("malformed-presentation",
                 "defining identity fails at relation " + std::to_string(k + 1));
    }

    if (E_.is_zero() || e_degree() < 1)
        fail("malformed-presentation", "relation polynomial must involve the last invariant");
    if (invs_.size() + 1 == inv_vars_.size()) {
        // Purely transcendental convention: E = J_{n+1} - 1.
        MPoly expect = MPoly::variable(inv_vars_, inv_vars_.back()) -
                       MPoly::constant(inv_vars_, BigRat(1));
        if (E_ != expect)
            fail("malformed-presentation",
                 "purely transcendental presentations use E = J_last - 1");
    } else {
        RatFrac ev = eliminate_frac(*this, invariants_substituted(E_));
        if (!ev.num().is_zero())
            fail("malformed-presentation", "E does not vanish on the invariants");
    }
}

GradedPoly::GradedPoly(const GradedPresentation& pres, MPoly terms, int weight)
    : pres_(&pres), terms_(std::move(terms)), weight_(weight) {
    if (terms_.vars() != pres.gen_vars())
        fail("variable-mismatch", "graded polynomial must use the generator variables");
    int w = 0;
    if (!homogeneous_weight(pres, terms_, &w))
        fail("weight-mismatch", "polynomial is not homogeneous");
    if (!terms_.is_zero() && w != weight_)
        fail("weight-mismatch", "declared weight does not match the monomials");
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    if (pres_ != o.pres_ || weight_ != o.weight_)
        fail("weight-mismatch", "sum of graded polynomials needs equal weights");
    return GradedPoly(*pres_, terms_ + o.terms_, weight_);
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    if (pres_ != o.pres_) fail("weight-mismatch", "product needs one presentation");
    return GradedPoly(*pres_, terms_ * o.terms_, weight_ + o.weight_);
}

std::vector<int> beta_exponents(const std::vector<int>& weights) {
    if (weights.size() < 2) fail("malformed-presentation", "need at least 2 weights");
    std::vector<int> beta;
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
        int g = 0;
        for (std::size_t j = k + 1; j < weights.size(); ++j) g = std::gcd(g, weights[j]);
        beta.push_back(g / std::gcd(weights[k], g));
    }
    return beta;
}

namespace {

BigRat sgc_case1_value(const GradedPresentation& pres) {
    const auto& rels = pres.relations();
    BigRat a(0);
    BigRat m(0);
    for (std::size_t k = 0; k < rels.size(); ++k) {
        int bw = rels[k].beta * pres.weight_of(k);
        BigRat ratio = rat(pres.weight_of_monomial(rels[k].xi), bw);
        if (ratio > a) a = ratio;
        BigRat dm = rat(rels[k].P.total_degree_or(0), bw + pres.weight_of_monomial(rels[k].xi));
        if (dm > m) m = dm;
    }
    return (BigRat(1) + a) * m;
}

BigRat sgc_case2_value(const GradedPresentation& pres) {
    const auto& rels = pres.relations();
    BigRat total(0);
    BigRat prefix(1);
    for (std::size_t k = 0; k < rels.size(); ++k) {
        int bw = rels[k].beta * pres.weight_of(k);
        int dmax = std::max(rels[k].P.total_degree_or(0), rels[k].Q.total_degree_or(0));
        total += rat(dmax, bw) * prefix;
        prefix *= BigRat(1) + rat(pres.weight_of_monomial(rels[k].xi), bw);
    }
    return total;
}

// 0 <= s < beta with s*w_k = z (mod gcd of the later weights).
int solve_residue(const GradedPresentation& pres, int k, long z) {
    int r = pres.rank();
    long g = 0;
    for (int j = k + 1; j < r; ++j) g = std::gcd(g, static_cast<long>(pres.weight_of(j)));
    int beta = pres.relations()[k].beta;
    for (int s = 0; s < beta; ++s) {
        long rem = z - static_cast<long>(s) * pres.weight_of(k);
        if (g == 0 ? rem == 0 : rem % g == 0) return s;
    }
    fail("weight-mismatch", "weight is not realizable by the generator weights");
}

struct PowerTable {
    std::vector<MPoly> p;
    const MPoly& operator[](std::size_t i) { return p[i]; }
    void ensure(const MPoly& base, std::size_t upto) {
        if (p.empty()) p.push_back(MPoly::constant(base.vars(), BigRat(1)));
        while (p.size() <= upto) p.push_back(p.back() * base);
    }
};

// Case 1 of the rewriting algorithm, applied to one homogeneous polynomial.
// Every multiplication or exact division below is shared between numerator
// and denominator of the quotient being rewritten, because it depends only
// on the common weight; the relation substitutions preserve the function.
MPoly case1_to_invariants(const GradedPresentation& pres, const MPoly& poly, int w) {
    const auto& rels = pres.relations();
    const auto& jvars = pres.inv_vars();
    int r = pres.rank();
    MPoly out(jvars);
    if (poly.is_zero()) return out;

    // Residues s_k for k <= r-2 (1-based k <= r-2), peeled off w greedily.
    std::vector<int> s(std::max(0, r - 2), 0);
    long t = w;
    for (int k = 0; k + 2 < r; ++k) {
        s[k] = solve_residue(pres, k, t);
        t -= static_cast<long>(s[k]) * pres.weight_of(k);
    }
    long w_red = t;

    // a = max wt(xi_k)/(beta_k w_k); multiplier exponent floor(a*w/w_{r-1}).
    BigRat a(0);
    for (int k = 0; k + 1 < r; ++k) {
        BigRat ratio = rat(pres.weight_of_monomial(rels[k].xi),
                           rels[k].beta * pres.weight_of(k));
        if (ratio > a) a = ratio;
    }
    BigRat mult = a * rat(w_red, pres.weight_of(r - 2));
    BigInt m1;
    mpz_fdiv_q(m1.get_mpz_t(), mult.get_num().get_mpz_t(), mult.get_den().get_mpz_t());
    long m1l = m1.get_si();

    long w2 = w_red + m1l * pres.weight_of(r - 2);
    int s_last = solve_residue(pres, r - 2, w2);
    long w3 = w2 - static_cast<long>(s_last) * pres.weight_of(r - 2);

    std::vector<PowerTable> ppow(rels.size());
    for (const auto& [exps, coeff] : poly.terms()) {
        std::vector<long> alpha(exps.begin(), exps.end());
        MPoly jpart = MPoly::constant(jvars, coeff);
        for (int k = 0; k + 2 < r; ++k) {
            alpha[k] -= s[k];
            if (alpha[k] < 0 || alpha[k] % rels[k].beta != 0)
                fail("weight-mismatch", "monomial residues disagree with the common weight");
        }
        alpha[r - 2] += m1l;
        for (int k = 0; k + 2 < r; ++k) {
            long b = alpha[k] / rels[k].beta;
            if (b > 0) {
                ppow[k].ensure(rels[k].P, static_cast<std::size_t>(b));
                jpart = jpart * ppow[k][static_cast<std::size_t>(b)];
                alpha[r - 1] += b * rels[k].lambda[r - 1];
                alpha[r - 2] -= b * rels[k].xi[r - 2];
                if (alpha[r - 2] < 0)
                    fail("weight-mismatch", "xi denominator exceeds the prepared multiplier");
            }
            alpha[k] = 0;
        }
        alpha[r - 2] -= s_last;
        if (alpha[r - 2] < 0 || alpha[r - 2] % rels[r - 2].beta != 0)
            fail("weight-mismatch", "monomial residue mismatch at the last relation");
        long b = alpha[r - 2] / rels[r - 2].beta;
        if (b > 0) {
            ppow[r - 2].ensure(rels[r - 2].P, static_cast<std::size_t>(b));
            jpart = jpart * ppow[r - 2][static_cast<std::size_t>(b)];
            alpha[r - 1] += b * rels[r - 2].lambda[r - 1];
        }
        alpha[r - 2] = 0;
        if (alpha[r - 1] * pres.weight_of(r - 1) != w3)
            fail("weight-mismatch", "residual weight is not a power of the last generator");
        out = out + jpart;
    }
    return out;
}

// Case 2: sequential elimination of each generator, keeping the loop
// invariants z_k (weight) and the per-monomial J-polynomial bookkeeping.
MPoly case2_to_invariants(const GradedPresentation& pres, const MPoly& poly, int w) {
    const auto& rels = pres.relations();
    const auto& jvars = pres.inv_vars();
    int r = pres.rank();
    MPoly out(jvars);
    if (poly.is_zero()) return out;

    struct Mono {
        std::vector<long> alpha;
        MPoly jpart;
    };
    std::vector<Mono> monos;
    for (const auto& [exps, coeff] : poly.terms())
        monos.push_back({std::vector<long>(exps.begin(), exps.end()),
                         MPoly::constant(jvars, coeff)});

    long z = w;
    for (int k = 0; k + 1 < r; ++k) {
        int sk = solve_residue(pres, k, z);
        long ak_num = z;
        long bw = static_cast<long>(rels[k].beta) * pres.weight_of(k);
        long ak = ak_num / bw; // z >= 0
        PowerTable Ppow, Qpow;
        for (auto& m : monos) {
            m.alpha[k] -= sk;
            if (m.alpha[k] < 0 || m.alpha[k] % rels[k].beta != 0)
                fail("weight-mismatch", "monomial residues disagree with the common weight");
            long b = m.alpha[k] / rels[k].beta;
            if (b > ak) fail("weight-mismatch", "exponent exceeds the loop bound");
            m.alpha[k] = 0;
            for (int i = 0; i < r; ++i) {
                m.alpha[i] += b * rels[k].lambda[i];
                m.alpha[i] += (ak - b) * rels[k].xi[i];
            }
            Ppow.ensure(rels[k].P, static_cast<std::size_t>(b));
            Qpow.ensure(rels[k].Q, static_cast<std::size_t>(ak - b));
            m.jpart = m.jpart * Ppow[static_cast<std::size_t>(b)];
            m.jpart = m.jpart * Qpow[static_cast<std::size_t>(ak - b)];
        }
        z = z - static_cast<long>(sk) * pres.weight_of(k) +
            ak * pres.weight_of_monomial(rels[k].xi);
    }
    for (auto& m : monos) {
        if (m.alpha[r - 1] * pres.weight_of(r - 1) != z)
            fail("weight-mismatch", "residual weight is not a power of the last generator");
        out = out + m.jpart;
    }
    return out;
}

RatFrac rewrite_with(const GradedPoly& f, const GradedPoly& g, GcCase mode) {
    const GradedPresentation& pres = f.presentation();
    if (&pres != &g.presentation())
        fail("weight-mismatch", "rewrite needs one presentation for both forms");
    if (f.weight() != g.weight()) fail("weight-mismatch", "rewrite needs equal weights");
    if (g.terms().is_zero()) fail("zero-denominator", "rewrite denominator form is zero");
    int w = f.weight();
    MPoly num = mode == GcCase::case1 ? case1_to_invariants(pres, f.terms(), w)
                                      : case2_to_invariants(pres, f.terms(), w);
    MPoly den = mode == GcCase::case1 ? case1_to_invariants(pres, g.terms(), w)
                                      : case2_to_invariants(pres, g.terms(), w);
    RatFrac out(std::move(num), std::move(den));
    BigRat c = mode == GcCase::case1 ? sgc_case1_value(pres) : sgc_case2_value(pres);
    int bound = ceil_rat(c * BigRat(w));
    if (out.num().total_degree_or(0) > bound || out.den().total_degree_or(0) > bound)
        fail("internal", "rewrite degree bound violated");
    return out;
}

} // namespace

BigRat sgc(const GradedPresentation& pres) {
    return pres.case_tag() == GcCase::case1 ? sgc_case1_value(pres) : sgc_case2_value(pres);
}

BigRat gc(const GradedPresentation& pres) {
    int e = pres.e_degree();
    int dE = pres.dE_degree();
    return rat(e + 2 * dE, 1) * sgc(pres) + rat(e - 1, 1);
}

RatFrac rewrite_case1(const GradedPoly& f, const GradedPoly& g) {
    if (f.presentation().case_tag() != GcCase::case1)
        fail("malformed-presentation", "presentation does not satisfy the case-1 conditions");
    return rewrite_with(f, g, GcCase::case1);
}

RatFrac rewrite_case2(const GradedPoly& f, const GradedPoly& g) {
    return rewrite_with(f, g, GcCase::case2);
}

RatFrac rewrite(const GradedPoly& f, const GradedPoly& g) {
    return rewrite_with(f, g, f.presentation().case_tag());
}

RatFrac canonical_form(const MPoly& p, const MPoly& q, const MPoly& E) {
    if (p.vars() != q.vars() || p.vars() != E.vars())
        fail("variable-mismatch", "canonical_form operands differ in variables");
    const std::string& last = E.vars().back();
    std::size_t li = E.vars().size() - 1;
    int e = E.degree_in(li);
    if (e < 1) fail("malformed-presentation", "relation must involve the last variable");
    if (q.is_zero()) fail("resultant-zero", "denominator is zero");

    BezoutResult bz = bezout(q, E, last);
    if (bz.z.is_zero()) fail("resultant-zero", "denominator shares a factor with the relation");

    MPoly num = bz.u * p;
    MPoly den = bz.z;
    MPoly Ee = E.coeff_of(li, static_cast<unsigned>(e));
    while (num.degree_in(li) >= e) {
        int D = num.degree_in(li);
        MPoly top = num.coeff_of(li, static_cast<unsigned>(D));
        MPoly::Exponents sh(E.vars().size(), 0);
        sh[li] = static_cast<std::uint32_t>(D - e);
        num = Ee * num - top * MPoly::monomial(E.vars(), sh, BigRat(1)) * E;
        den = den * Ee;
    }
    return RatFrac(std::move(num), std::move(den));
}

bool verify_rewrite(const RatFrac& result, const GradedPoly& f, const GradedPoly& g) {
    const GradedPresentation& pres = f.presentation();
    if (&pres != &g.presentation()) return false;
    RatFrac rn = pres.invariants_substituted(result.num());
    RatFrac rd = pres.invariants_substituted(result.den());
    // f/g = (rn.num/rn.den) / (rd.num/rd.den), compared in the free ring.
    RatFrac left = eliminate_frac(pres, RatFrac(f.terms() * rn.den() * rd.num(),
                                                MPoly::constant(pres.gen_vars(), BigRat(1))));
    RatFrac right = eliminate_frac(pres, RatFrac(g.terms() * rn.num() * rd.den(),
                                                 MPoly::constant(pres.gen_vars(), BigRat(1))));
    return left.same_function(right);
}

namespace {

GradedPresentation make_igusa() {
    using G = GradedPresentation::Generator;
    using I = GradedPresentation::Invariant;
    std::vector<std::string> gv{"I6p", "I12", "I4", "I10"};
    std::vector<std::string> jv{"J1", "J2", "J3", "J4"};
    auto mono = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
        return MPoly::monomial(gv, {a, b, c, d}, BigRat(1));
    };
    std::vector<I> invs{
        {"J1", mono(1, 0, 1, 0), mono(0, 0, 0, 1)},
        {"J2", mono(0, 1, 2, 0), mono(0, 0, 0, 2)},
        {"J3", mono(0, 0, 5, 0), mono(0, 0, 0, 2)},
    };
    std::vector<GradedRelation> rels{
        {1, {0, 0, 1, 0}, {0, 0, 0, 1}, MPoly::variable(jv, "J1"), MPoly::constant(jv, BigRat(1))},
        {1, {0, 0, 2, 0}, {0, 0, 0, 2}, MPoly::variable(jv, "J2"), MPoly::constant(jv, BigRat(1))},
        {5, {0, 0, 0, 0}, {0, 0, 0, 2}, MPoly::variable(jv, "J3"), MPoly::constant(jv, BigRat(1))},
    };
    MPoly E = MPoly::variable(jv, "J4") - MPoly::constant(jv, BigRat(1));
    return GradedPresentation({G{"I6p", 6}, G{"I12", 12}, G{"I4", 4}, G{"I10", 10}},
                              std::move(invs), std::move(rels), std::move(E), GcCase::case1);
}

GradedPresentation make_gundlach() {
    using G = GradedPresentation::Generator;
    using I = GradedPresentation::Invariant;
    std::vector<std::string> gv{"F6", "F2", "F10"};
    std::vector<std::string> jv{"J1", "J2", "J3"};
    auto mono = [&](unsigned a, unsigned b, unsigned c) {
        return MPoly::monomial(gv, {a, b, c}, BigRat(1));
    };
    std::vector<I> invs{
        {"J1", mono(0, 5, 0), mono(0, 0, 1)},
        {"J2", mono(1, 2, 0), mono(0, 0, 1)},
    };
    std::vector<GradedRelation> rels{
        {1, {0, 2, 0}, {0, 0, 1}, MPoly::variable(jv, "J2"), MPoly::constant(jv, BigRat(1))},
        {5, {0, 0, 0}, {0, 0, 1}, MPoly::variable(jv, "J1"), MPoly::constant(jv, BigRat(1))},
    };
    MPoly E = MPoly::variable(jv, "J3") - MPoly::constant(jv, BigRat(1));
    return GradedPresentation({G{"F6", 6}, G{"F2", 2}, G{"F10", 10}}, std::move(invs),
                              std::move(rels), std::move(E), GcCase::case1);
}

GradedPresentation make_elliptic() {
    using G = GradedPresentation::Generator;
    using I = GradedPresentation::Invariant;
    std::vector<std::string> gv{"E6", "E4", "Delta"};
    std::vector<std::string> jv{"J1", "J2"};
    auto mono = [&](unsigned a, unsigned b, unsigned c) {
        return MPoly::monomial(gv, {a, b, c}, BigRat(1));
    };
    std::vector<I> invs{
        {"J1", mono(0, 3, 0), mono(0, 0, 1)},
    };
    std::vector<GradedRelation> rels{
        {2, {0, 0, 0}, {0, 0, 1},
         MPoly::variable(jv, "J1") - MPoly::constant(jv, BigRat(1728)),
         MPoly::constant(jv, BigRat(1))},
        {3, {0, 0, 0}, {0, 0, 1}, MPoly::variable(jv, "J1"), MPoly::constant(jv, BigRat(1))},
    };
    MPoly E = MPoly::variable(jv, "J2") - MPoly::constant(jv, BigRat(1));
    // The three generators are not free: Delta = (E4^3 - E6^2)/1728.
    std::vector<std::optional<RatFrac>> elim(3);
    elim[2] = RatFrac(mono(0, 3, 0) - mono(2, 0, 0), MPoly::constant(gv, BigRat(1728)));
    return GradedPresentation({G{"E6", 6}, G{"E4", 4}, G{"Delta", 12}}, std::move(invs),
                              std::move(rels), std::move(E), GcCase::case1, std::move(elim));
}

} // namespace

const BuiltinPresentations& builtin_presentations() {
    static const BuiltinPresentations b{make_igusa(), make_gundlach(), make_elliptic()};
    return b;
}

const GradedPresentation& builtin_presentation(const std::string& name) {
    const auto& b = builtin_presentations();
    if (name == "igusa") return b.igusa;
    if (name == "gundlach_q5") return b.gundlach_q5;
    if (name == "elliptic") return b.elliptic;
    fail("unsupported-family", "unknown presentation '" + name + "'");
}

} // namespace modeq
