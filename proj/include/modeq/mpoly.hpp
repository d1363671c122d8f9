#ifndef MODEQ_MPOLY_HPP
#define MODEQ_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modeq/error.hpp"
#include "modeq/rational.hpp"

namespace modeq {

// Sparse multivariate polynomial over BigRat with a fixed, ordered variable
// list. Exponent vectors always have length vars().size(); no zero
// coefficients are stored. Binary operations require identical variable
// lists and throw "variable-mismatch" otherwise.
class MPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, BigRat>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const BigRat& c);
    static MPoly variable(std::vector<std::string> vars, const std::string& name);
    // Single monomial c * prod vars[i]^exps[i].
    static MPoly monomial(std::vector<std::string> vars, Exponents exps, const BigRat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    BigRat constant_value() const;

    std::size_t var_index(const std::string& name) const;

    // Total degree; nullopt is the distinguished value for the zero
    // polynomial and never enters arithmetic.
    std::optional<int> total_degree() const;
    int total_degree_or(int zero_value) const;
    int degree_in(std::size_t var) const;   // -1 only for the zero polynomial
    int degree_in(const std::string& var) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const BigRat& c) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(unsigned e) const;

    // Exact evaluation at a full rational point (one value per variable).
    BigRat eval(const std::vector<BigRat>& point) const;

    // Substitute an image polynomial for every variable. All images must
    // share one variable list, which becomes the result's list.
    MPoly substitute(const std::vector<MPoly>& images) const;

    // View as univariate in vars()[var]: coefficient of vars()[var]^k, as a
    // polynomial over the same variable list with that exponent zeroed.
    MPoly coeff_of(std::size_t var, unsigned k) const;
    std::vector<MPoly> univariate_coeffs(std::size_t var) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<MPoly> exact_div(const MPoly& divisor) const;

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients. Zero polynomial gives 1.
    BigRat integer_content() const;

    // True when every coefficient is an integer.
    bool has_integer_coeffs() const;

    void add_term(const Exponents& e, const BigRat& c);

    std::string to_string() const;

private:
    void check_compatible(const MPoly& o) const;
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MPoly operator*(const BigRat& c, const MPoly& p) { return p * c; }

// Parses integer-coefficient polynomial expressions over the given
// variables: +, -, *, ^, parentheses, decimal integers. Throws
// "parse-error" / "undeclared-variable".
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

} // namespace modeq

#endif
