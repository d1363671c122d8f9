#include "modeq/ratfrac.hpp"

namespace modeq {

RatFrac::RatFrac(MPoly num, MPoly den, Coprimality flag)
    : num_(std::move(num)), den_(std::move(den)), flag_(flag) {
    if (num_.vars() != den_.vars())
        fail("variable-mismatch", "fraction parts have different variable lists");
    if (den_.is_zero()) fail("zero-denominator", "fraction denominator is the zero polynomial");
    BigRat cn = num_.integer_content();
    BigRat cd = den_.integer_content();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
    BigInt l;
    mpz_lcm(l.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
    BigRat scale = num_.is_zero() ? BigRat(1) / cd : rat(l, g);
    num_ = num_ * scale;
    den_ = den_ * scale;
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFrac RatFrac::from_poly(MPoly num) {
    MPoly one = MPoly::constant(num.vars(), BigRat(1));
    return RatFrac(std::move(num), std::move(one), Coprimality::declared_coprime);
}

RatFrac RatFrac::operator+(const RatFrac& o) const {
    return RatFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFrac RatFrac::operator-(const RatFrac& o) const {
    return RatFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFrac RatFrac::operator*(const RatFrac& o) const {
    return RatFrac(num_ * o.num_, den_ * o.den_);
}

bool RatFrac::same_function(const RatFrac& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RatFrac::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace modeq
