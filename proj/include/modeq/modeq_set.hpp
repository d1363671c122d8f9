#ifndef MODEQ_MODEQ_SET_HPP
#define MODEQ_MODEQ_SET_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "modeq/constants.hpp"
#include "modeq/hecke.hpp"
#include "modeq/ratfrac.hpp"

namespace modeq {

// One term of a modular equation Psi_{delta,m}: the monomial in the Y
// variables and the distinguished invariant, with its coefficient fraction
// in J_1..J_n.
struct ModeqTerm {
    std::vector<unsigned> y_exps;
    unsigned jlast_exp = 0;
    RatFrac coeff;
};

struct ModeqEquation {
    int m = 1;
    std::vector<ModeqTerm> terms;
};

struct ModularEquationSet {
    HeckeFamily family;
    std::vector<std::string> j_vars; // J_1..J_n
    std::vector<ModeqEquation> equations;
};

// Elliptic database text format: one monomial per line, "[i,j] c" with
// i >= j meaning coefficient c of X^i Y^j; the symmetric part is implied.
ModularEquationSet parse_elliptic_db(std::istream& in, long level);
ModularEquationSet parse_elliptic_db_file(const std::string& path, long level);
// Inverse of the parser for a symmetric bivariate polynomial.
std::string format_elliptic_db(const MPoly& phi, long level);

// JSON exchange format (schema 1); see README for the layout.
ModularEquationSet parse_modeq_json(std::istream& in);
ModularEquationSet parse_modeq_json_file(const std::string& path);
std::string serialize_modeq_json(const ModularEquationSet& set);

struct AuditRow {
    int m = 1;
    std::vector<unsigned> y_exps;
    unsigned jlast_exp = 0;
    int total_degree = 0;
    std::vector<int> var_degrees;
    double height = 0;
    bool height_known = true;
    std::string note;
};

struct AuditReport {
    std::string family;
    std::string level;
    std::vector<AuditRow> rows;
    // per-m maxima and bounds
    struct PerEquation {
        int m = 1;
        int max_total_degree = 0;
        BigInt degree_bound;
        bool degree_pass = true;
        int y_degree = 0;         // degree in Y_m
        BigInt y_degree_expected; // d(delta) for m = 1, else <= 1
        bool y_degree_pass = true;
        double max_height = 0;
        double height_bound = -1; // < 0: no bound column
        bool height_pass = true;
        std::string height_note;
    };
    std::vector<PerEquation> per_equation;
    double elapsed_seconds = 0;
    bool all_pass = true;

    std::string to_text() const;
    std::string to_json() const;
};

// Checks observed degrees and heights against the published bounds.
// paranoid re-checks declared coprimality by common-root sampling.
AuditReport audit(const ModularEquationSet& set, bool paranoid = false);

} // namespace modeq

#endif
