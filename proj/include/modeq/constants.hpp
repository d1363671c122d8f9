#ifndef MODEQ_CONSTANTS_HPP
#define MODEQ_CONSTANTS_HPP

#include <string>
#include <vector>

#include "modeq/hecke.hpp"
#include "modeq/rational.hpp"

namespace modeq {

// One named constant with its provenance: either computed here (the formula
// is recorded) or consumed as a published input (the citation is recorded).
struct LedgerEntry {
    std::string name;
    double value = 0;
    enum class Provenance { computed, paper_input } provenance = Provenance::computed;
    std::string detail; // formula or citation
};

class HeightConstantLedger {
public:
    void put(LedgerEntry e);
    const LedgerEntry& get(const std::string& name) const;
    bool has(const std::string& name) const;
    const std::vector<LedgerEntry>& entries() const { return entries_; }

private:
    std::vector<LedgerEntry> entries_;
};

// Exact degree-bound coefficient for the coefficients of the m-th modular
// equation: GC * (denominator weight per unit Hecke degree), e.g. 5/3 for
// Siegel m = 1. bound_at_level is the integer bound GC * wt(g_{delta,m}),
// rounded up.
struct DegreeBound {
    BigRat coefficient;
    BigInt bound_at_level;
};

DegreeBound degree_bound(const HeckeFamily& fam, int m);

// 1000 r^{2g} log^5(r^{2g})
double theta_faltings_constant(int g, int r);

// The constant chain for principally polarized abelian surfaces: from the
// theta/j-height comparison through the isogeny bound. Each computed value
// is checked against its published rounding (never exceeding it, within 1%)
// and the rounding is what later steps consume, so every later bound stays a
// valid bound.
HeightConstantLedger siegel_height_chain();

// The constant making h(Psi(j)) <= C d (Hbar + log l) explicit; <= 3.35e12.
double evaluation_height_constant(const HeightConstantLedger& ledger);

struct InterpDataConstants {
    double c1, c2, c3, max;
};

InterpDataConstants interp_data_constants(double c_deg, double c_eval, double c_log, double c_locus,
                                     int field_degree);

// The final height-bound constant (theorem-statement formula; the proof's
// variant C' is exposed for cross-checking).
double final_height_constant(const HeightConstantLedger& ledger, int n);
double final_height_constant_proof_variant(const HeightConstantLedger& ledger, int n);

struct EvaluationLocusDegree {
    BigRat coefficient;      // degree growth per unit Hecke degree (7/3 Siegel)
    double constant;         // published valid constant (15)
    long min_hecke_degree;   // validity threshold d(delta) >= 15
    BigInt lambda_weight;    // wt(lambda^delta) at the family's level
};

EvaluationLocusDegree evaluation_locus_degree(const HeckeFamily& fam);

// Assembles the full ledger for the Siegel family: theta-Faltings
// comparison, isogeny chain, evaluation-height constant,
// interpolation-data constants, and the final per-level coefficient.
HeightConstantLedger full_ledger();

struct BoundReport {
    std::string family;
    std::string level;
    int m = 1;
    BigRat degree_coefficient;
    BigInt degree_bound;
    double height_bound = -1; // per-coefficient height bound; < 0 when none
    std::string height_note;
};

BoundReport bound_report(const HeckeFamily& fam, int m);

} // namespace modeq

#endif
