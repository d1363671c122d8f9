#include "modeq/rational.hpp"

#include <cmath>

namespace modeq {

double log_bigint(const BigInt& x) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const BigRat& x) {
    return log_bigint(x.get_num()) - log_bigint(x.get_den());
}

bool is_integer(const BigRat& x) { return x.get_den() == 1; }

} // namespace modeq
