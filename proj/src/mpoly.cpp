#include "modeq/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace modeq {

MPoly MPoly::constant(std::vector<std::string> vars, const BigRat& c) {
    MPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(e), BigRat(1));
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exps, const BigRat& c) {
    MPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        fail("variable-mismatch", "monomial exponent vector has wrong length");
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

BigRat MPoly::constant_value() const {
    if (terms_.empty()) return BigRat(0);
    if (!is_constant()) fail("variable-mismatch", "constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::size_t MPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    fail("undeclared-variable", "unknown variable '" + name + "'");
}

std::optional<int> MPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        best = std::max(best, d);
    }
    return best;
}

int MPoly::total_degree_or(int zero_value) const {
    auto d = total_degree();
    return d ? *d : zero_value;
}

int MPoly::degree_in(std::size_t var) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
    return best;
}

int MPoly::degree_in(const std::string& var) const { return degree_in(var_index(var)); }

void MPoly::check_compatible(const MPoly& o) const {
    if (vars_ != o.vars_) fail("variable-mismatch", "operands have different variable lists");
}

void MPoly::add_term(const Exponents& e, const BigRat& c) {
    if (c == 0) return;
    if (e.size() != vars_.size()) fail("variable-mismatch", "exponent vector has wrong length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator*(const BigRat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool MPoly::operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = MPoly::constant(vars_, BigRat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

BigRat MPoly::eval(const std::vector<BigRat>& point) const {
    if (point.size() != vars_.size()) fail("variable-mismatch", "evaluation point has wrong length");
    BigRat total(0);
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != vars_.size())
        fail("variable-mismatch", "substitution must map every variable");
    std::vector<std::string> tvars = images.empty() ? vars_ : images[0].vars();
    for (const auto& im : images)
        if (im.vars() != tvars) fail("variable-mismatch", "substitution images disagree on variables");
    MPoly r(tvars);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

MPoly MPoly::coeff_of(std::size_t var, unsigned k) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == k) {
            Exponents e2 = e;
            e2[var] = 0;
            r.terms_.emplace(std::move(e2), c);
        }
    }
    return r;
}

std::vector<MPoly> MPoly::univariate_coeffs(std::size_t var) const {
    int d = degree_in(var);
    std::vector<MPoly> out;
    for (int k = 0; k <= d; ++k) out.push_back(coeff_of(var, static_cast<unsigned>(k)));
    return out;
}

std::optional<MPoly> MPoly::exact_div(const MPoly& divisor) const {
    check_compatible(divisor);
    if (divisor.is_zero()) return std::nullopt;
    MPoly rem = *this;
    MPoly quot(vars_);
    // Lex leading-term elimination: for an exact quotient the divisor's
    // leading monomial divides the remainder's at every step.
    const auto& dlead = *divisor.terms_.rbegin();
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents q(vars_.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (rlead.first[i] < dlead.first[i]) return std::nullopt;
            q[i] = rlead.first[i] - dlead.first[i];
        }
        BigRat qc = rlead.second / dlead.second;
        quot.add_term(q, qc);
        MPoly sub = divisor * MPoly::monomial(vars_, q, qc);
        rem = rem - sub;
    }
    return quot;
}

BigRat MPoly::integer_content() const {
    if (terms_.empty()) return BigRat(1);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

bool MPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest lex term first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
        bool coeff_shown = (a != 1) || !has_vars;
        if (coeff_shown) os << a.get_str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

// Minimal recursive-descent parser for integer-coefficient polynomial
// expressions.
class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars)
        : s_(text), vars_(vars) {}

    MPoly parse() {
        MPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("parse-error", "trailing characters at position " + std::to_string(pos_));
        return r;
    }

private:
    MPoly expr() {
        MPoly acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') { ++pos_; acc = acc + term(); }
            else if (peek() == '-') { ++pos_; acc = acc - term(); }
            else break;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') { ++pos_; acc = acc * factor(); }
            else break;
        }
        return acc;
    }

    MPoly factor() {
        skip_ws();
        char c = peek();
        if (c == '-') { ++pos_; return -factor(); }
        if (c == '+') { ++pos_; return factor(); }
        MPoly base;
        if (c == '(') {
            ++pos_;
            base = expr();
            skip_ws();
            if (peek() != ')') fail("parse-error", "expected ')' at position " + std::to_string(pos_));
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = MPoly::constant(vars_, BigRat(BigInt(s_.substr(start, pos_ - start))));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                fail("undeclared-variable", "variable '" + name + "' not declared");
            base = MPoly::variable(vars_, name);
        } else {
            fail("parse-error", std::string("unexpected character '") + c + "' at position " +
                                    std::to_string(pos_));
        }
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("parse-error", "expected exponent at position " + std::to_string(pos_));
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return PolyParser(text, vars).parse();
}

} // namespace modeq
