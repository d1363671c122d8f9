#ifndef MODEQ_RATFRAC_HPP
#define MODEQ_RATFRAC_HPP

#include "modeq/mpoly.hpp"

namespace modeq {

enum class Coprimality {
    declared_coprime,     // caller asserts gcd(num, den) is constant
    content_reduced_only, // only the shared integer content was removed
};

// Numerator/denominator pair. Construction scales both parts by one rational
// so that all coefficients are integers with joint content 1 and the
// denominator's lex-leading coefficient is positive. No multivariate gcd is
// ever computed; full coprimality is the caller's declaration.
class RatFrac {
public:
    RatFrac() = default;
    RatFrac(MPoly num, MPoly den, Coprimality flag = Coprimality::content_reduced_only);

    static RatFrac from_poly(MPoly num);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    Coprimality flag() const { return flag_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFrac operator+(const RatFrac& o) const;
    RatFrac operator-(const RatFrac& o) const;
    RatFrac operator*(const RatFrac& o) const;

    // Equality as rational functions (cross multiplication), not
    // representation equality.
    bool same_function(const RatFrac& o) const;

    std::string to_string() const;

private:
    MPoly num_;
    MPoly den_;
    Coprimality flag_ = Coprimality::content_reduced_only;
};

} // namespace modeq

#endif
