#include "modeq/evaltree.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "modeq/resultant.hpp"

namespace modeq {

namespace {

std::vector<std::string> y_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("Y" + std::to_string(i));
    return v;
}

// Substitute one variable by a rational constant.
MPoly eval_var(const MPoly& p, std::size_t var, const BigRat& v) {
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        BigRat coeff = c;
        for (std::uint32_t k = 0; k < e[var]; ++k) coeff *= v;
        MPoly::Exponents e2 = e;
        e2[var] = 0;
        r.add_term(e2, coeff);
    }
    return r;
}

// Rebuild a polynomial positionally over a fresh variable list.
MPoly rename_vars(const MPoly& p, const std::vector<std::string>& vars) {
    if (p.vars().size() != vars.size())
        fail("variable-mismatch", "avoid polynomial has the wrong variable count");
    MPoly r(vars);
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
}

// J_i -> y_i Y_n + a_i (i < n), J_n -> Y_n + a_n, into the line coordinates.
MPoly substitute_line(const MPoly& p, const std::vector<std::string>& yv,
                      const std::vector<long>& a) {
    std::size_t n = a.size();
    std::vector<MPoly> images;
    MPoly yn = MPoly::variable(yv, yv[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        images.push_back(MPoly::variable(yv, yv[i]) * yn + MPoly::constant(yv, BigRat(a[i])));
    images.push_back(yn + MPoly::constant(yv, BigRat(a[n - 1])));
    return p.substitute(images);
}

// ---- dense univariate helpers over BigRat ----

using QPoly = std::vector<BigRat>; // ascending coefficients

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

BigRat qeval(const QPoly& p, const BigRat& x) {
    BigRat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// (quotient, remainder) over Q
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (b.empty()) fail("zero-denominator", "division by the zero polynomial");
    while (qdeg(a) >= qdeg(b)) {
        int shift = qdeg(a) - qdeg(b);
        BigRat f = a.back() / b.back();
        if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, BigRat(0));
        q[shift] += f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        qtrim(a);
        if (a.empty()) break;
    }
    qtrim(q);
    return {q, a};
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        auto [q, r] = qdivmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Lagrange interpolation through all given points.
QPoly qinterp(const std::vector<std::pair<long, BigRat>>& pts) {
    QPoly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        QPoly basis{BigRat(1)};
        BigRat denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            basis = qmul(basis, QPoly{rat(-pts[j].first), BigRat(1)});
            denom *= rat(pts[i].first) - rat(pts[j].first);
        }
        BigRat f = pts[i].second / denom;
        if (acc.size() < basis.size()) acc.resize(basis.size(), BigRat(0));
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * f;
    }
    qtrim(acc);
    return acc;
}

// Interpolate with the first deg+1 points and require the rest to agree.
QPoly qinterp_checked(const std::vector<std::pair<long, BigRat>>& pts, int deg) {
    if (static_cast<int>(pts.size()) < deg + 1)
        fail("no-solution", "too few interpolation points");
    std::vector<std::pair<long, BigRat>> head(pts.begin(), pts.begin() + deg + 1);
    QPoly p = qinterp(head);
    for (std::size_t i = deg + 1; i < pts.size(); ++i) {
        if (qeval(p, rat(pts[i].first)) != pts[i].second)
            fail("verification-failure", "over-determined interpolation is inconsistent");
    }
    return p;
}

MPoly qpoly_to_mpoly(const QPoly& p, const std::vector<std::string>& vars, std::size_t var) {
    MPoly r(vars);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        MPoly::Exponents e(vars.size(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        r.add_term(e, p[i]);
    }
    return r;
}

} // namespace

std::vector<std::vector<long>> EvalTree::evaluation_set(int k) const {
    std::vector<std::vector<long>> out;
    std::vector<long> path;
    std::function<void(const Node&, int)> walk = [&](const Node& node, int depth) {
        if (depth == k) {
            out.push_back(path);
            return;
        }
        for (const Node& s : node.sons) {
            path.push_back(s.label);
            walk(s, depth + 1);
            path.pop_back();
        }
    };
    walk(root, 0);
    return out;
}

void EvalTree::check_structure() const {
    std::function<void(const Node&, int)> walk = [&](const Node& node, int depth) {
        if (depth == n) {
            if (!node.sons.empty()) fail("internal", "tree deeper than n");
            return;
        }
        long want = depth == n - 1 ? N2 : N1;
        if (static_cast<long>(node.sons.size()) != want)
            fail("internal", "tree arity violated at depth " + std::to_string(depth));
        std::set<long> labels;
        long lo = node.sons[0].label, hi = node.sons[0].label;
        for (const Node& s : node.sons) {
            if (!labels.insert(s.label).second) fail("internal", "tree sons are not distinct");
            if (std::labs(s.label) > M) fail("internal", "tree label exceeds the bound M");
            lo = std::min(lo, s.label);
            hi = std::max(hi, s.label);
        }
        long amp = depth == n - 1 ? D2 : D1;
        if (hi - lo > amp) fail("internal", "tree amplitude violated");
        for (const Node& s : node.sons) walk(s, depth + 1);
    };
    walk(root, 0);
}

std::vector<long> choose_base_point(const MPoly& den, long M);

std::vector<long> choose_base_point(const MPoly& den, long M) {
    if (den.is_zero()) fail("zero-denominator", "base point needs a nonzero denominator");
    std::size_t n = den.vars().size();
    std::vector<long> a;
    MPoly cur = den;
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (long mag = 0; mag <= M && !found; ++mag) {
            for (long v : mag == 0 ? std::vector<long>{0} : std::vector<long>{mag, -mag}) {
                MPoly next = eval_var(cur, i, rat(v));
                if (!next.is_zero()) {
                    a.push_back(v);
                    cur = std::move(next);
                    found = true;
                    break;
                }
            }
        }
        if (!found) fail("exhausted-search", "no base point within the bound M");
    }
    return a;
}

EvalData build_tree(int n, int d, long M, const std::vector<MPoly>& avoid, const MPoly& den,
                    const BuildOptions& opts) {
    if (n < 1 || d < 1 || M < 1) fail("hypothesis-violated", "build_tree needs n, d, M >= 1");
    if (static_cast<int>(den.vars().size()) != n)
        fail("variable-mismatch", "denominator must have n variables");

    EvalData data;
    data.M = M;
    data.base = choose_base_point(den, M);

    if (opts.strict) {
        if (!opts.B)
            fail("hypothesis-violated",
                 "strict mode needs the magnitude parameter B (family context)");
        double need = 2.0 * *opts.B * std::pow(std::log(*opts.B + 1.0), 2.0);
        if (static_cast<double>(M) < need)
            fail("hypothesis-violated",
                 "strict mode requires M >= 2 B log^2(B+1) = " + std::to_string(need));
        data.cond_magnitude = PaperScaleCondition::satisfied;
    }

    std::vector<std::string> yv = y_vars(n);
    std::vector<MPoly> active;
    for (const auto& p : avoid) {
        if (p.is_zero()) fail("hypothesis-violated", "avoid polynomials must be nonzero");
        active.push_back(rename_vars(p, yv));
    }
    active.push_back(substitute_line(den, yv, data.base));

    long N1 = 2L * d;
    long N2 = opts.N2 > 0 ? opts.N2 : 2L * d + 2;
    if (opts.strict) N2 = std::max(N2, M);

    EvalTree& tree = data.tree;
    tree.n = n;
    tree.N1 = N1;
    tree.N2 = N2;
    tree.D1 = 4L * d;
    tree.D2 = 2L * M;
    tree.M = M;
    data.excluded_per_level.assign(n, 0);
    data.window_index_per_level.assign(n, 0);

    std::function<void(EvalTree::Node&, int, const std::vector<MPoly>&)> grow =
        [&](EvalTree::Node& node, int depth, const std::vector<MPoly>& polys) {
            int level = depth + 1; // 1-based
            if (level < n) {
                // 2d labels inside the first admissible window [5kd, (5k+4)d].
                for (long w = 0;; ++w) {
                    long lo = 5 * w * d;
                    long hi = lo + 4 * d;
                    if (hi > M)
                        fail("exhausted-search",
                             "no admissible window at level " + std::to_string(level));
                    std::vector<long> good;
                    for (long v = lo; v <= hi && static_cast<long>(good.size()) < N1; ++v) {
                        bool ok = true;
                        for (const MPoly& p : polys) {
                            if (eval_var(p, depth, rat(v)).is_zero()) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok)
                            good.push_back(v);
                        else
                            ++data.excluded_per_level[depth];
                    }
                    if (static_cast<long>(good.size()) >= N1) {
                        data.window_index_per_level[depth] =
                            std::max(data.window_index_per_level[depth], w);
                        for (long v : good) {
                            EvalTree::Node son;
                            son.label = v;
                            std::vector<MPoly> restricted;
                            restricted.reserve(polys.size());
                            for (const MPoly& p : polys)
                                restricted.push_back(eval_var(p, depth, rat(v)));
                            grow(son, depth + 1, restricted);
                            node.sons.push_back(std::move(son));
                        }
                        return;
                    }
                }
            }
            // last level: N2 values in [-M, M], nearest to zero first
            std::vector<long> good;
            for (long mag = 0; mag <= M && static_cast<long>(good.size()) < N2; ++mag) {
                for (long v : mag == 0 ? std::vector<long>{0} : std::vector<long>{mag, -mag}) {
                    bool ok = true;
                    for (const MPoly& p : polys) {
                        if (eval_var(p, depth, rat(v)).is_zero()) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok)
                        good.push_back(v);
                    else
                        ++data.excluded_per_level[depth];
                    if (static_cast<long>(good.size()) >= N2) break;
                }
            }
            if (static_cast<long>(good.size()) < N2)
                fail("exhausted-search", "not enough admissible values at the last level");
            for (long v : good) {
                EvalTree::Node son;
                son.label = v;
                node.sons.push_back(std::move(son));
            }
        };
    grow(tree.root, 0, active);
    tree.check_structure();
    return data;
}

RatFrac line_restrict(const RatFrac& f, const std::vector<long>& y, const std::vector<long>& a) {
    std::size_t n = f.num().vars().size();
    if (y.size() + 1 != n || a.size() != n)
        fail("variable-mismatch", "line data does not match the variable count");
    std::vector<std::string> uv{"Y"};
    MPoly Yv = MPoly::variable(uv, "Y");
    std::vector<MPoly> images;
    for (std::size_t i = 0; i + 1 < n; ++i)
        images.push_back(Yv * BigRat(y[i]) + MPoly::constant(uv, rat(a[i])));
    images.push_back(Yv + MPoly::constant(uv, rat(a[n - 1])));
    MPoly num = f.num().substitute(images);
    MPoly den = f.den().substitute(images);
    MPoly g = gcd_univariate(num, den);
    if (g.total_degree_or(0) > 0) {
        num = *num.exact_div(g);
        den = *den.exact_div(g);
    }
    return RatFrac(std::move(num), std::move(den), Coprimality::declared_coprime);
}

RatFrac cauchy_interpolate(const std::vector<std::pair<long, BigRat>>& points, int num_deg,
                           int den_deg, long norm_point) {
    if (num_deg < 0 || den_deg < 0) fail("hypothesis-violated", "degree bounds must be >= 0");
    if (static_cast<int>(points.size()) < num_deg + den_deg + 2)
        fail("hypothesis-violated", "need at least num_deg + den_deg + 2 points");
    {
        std::set<long> xs;
        for (const auto& [x, v] : points)
            if (!xs.insert(x).second) fail("hypothesis-violated", "evaluation points must be distinct");
    }
    // Extended Euclid on (prod (x - x_i), Lagrange interpolant).
    QPoly modulus{BigRat(1)};
    for (const auto& [x, v] : points) modulus = qmul(modulus, QPoly{rat(-x), BigRat(1)});
    QPoly val = qinterp(points);

    QPoly r0 = modulus, r1 = val;
    QPoly t0, t1{BigRat(1)};
    while (qdeg(r1) > num_deg) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly tn = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    QPoly P = r1, Q = t1;
    if (Q.empty()) fail("no-solution", "no fraction with the given degree bounds");
    QPoly g = qgcd(P, Q);
    if (qdeg(g) > 0) {
        P = qdivmod(P, g).first;
        Q = qdivmod(Q, g).first;
    }
    if (qdeg(Q) > den_deg) fail("no-solution", "denominator degree bound too small");
    for (const auto& [x, v] : points) {
        BigRat qv = qeval(Q, rat(x));
        if (qv == 0) fail("pole-at-point", "reconstructed fraction has a pole at a data point");
        if (qeval(P, rat(x)) != v * qv) fail("no-solution", "data is not a fraction of this size");
    }
    BigRat norm = qeval(Q, rat(norm_point));
    if (norm == 0) norm = Q.back();
    for (auto& c : P) c /= norm;
    for (auto& c : Q) c /= norm;
    std::vector<std::string> uv{"Y"};
    return RatFrac(qpoly_to_mpoly(P, uv, 0), qpoly_to_mpoly(Q, uv, 0),
                   Coprimality::declared_coprime);
}

namespace {

// Collapse the tree from the leaves: per coefficient slot, successively
// interpolate the variables y_{n-1}, ..., y_1 with the 2d points at each
// vertex and an over-determination check.
struct SlotValues {
    std::vector<MPoly> num, den; // d+1 slots each, polynomials in the y-vars
};

SlotValues collapse(const EvalTree::Node& node, int depth, int n, int d,
                    const std::vector<long>& base, const FracOracle& oracle,
                    const std::vector<std::string>& yv, std::vector<long>& path) {
    if (depth == n - 1) {
        // one line: Cauchy-interpolate the univariate restriction
        std::vector<std::pair<long, BigRat>> pts;
        for (const auto& son : node.sons) {
            long yn = son.label;
            std::vector<BigRat> point;
            for (int i = 0; i + 1 < n; ++i) point.push_back(rat(path[i] * yn + base[i]));
            point.push_back(rat(yn + base[n - 1]));
            auto v = oracle(point);
            if (!v) fail("pole-at-point", "oracle has a pole on the evaluation tree");
            pts.emplace_back(yn, *v);
        }
        RatFrac line = cauchy_interpolate(pts, d, d, 0);
        // Force the proof's normalization den(0) = Q(a) = 1 exactly; the
        // fraction normalization may have rescaled it away.
        BigRat q0 = line.den().eval({rat(0)});
        if (q0 == 0) fail("pole-at-point", "line denominator vanishes at the base point");
        SlotValues out;
        for (int k = 0; k <= d; ++k) {
            out.num.push_back(
                MPoly::constant(yv, line.num().coeff_of(0, k).constant_value() / q0));
            out.den.push_back(
                MPoly::constant(yv, line.den().coeff_of(0, k).constant_value() / q0));
        }
        return out;
    }
    std::vector<long> labels;
    std::vector<SlotValues> sons;
    for (const auto& son : node.sons) {
        labels.push_back(son.label);
        path.push_back(son.label);
        sons.push_back(collapse(son, depth + 1, n, d, base, oracle, yv, path));
        path.pop_back();
    }
    auto interp_slot = [&](auto get) {
        // union of monomials across sons, one interpolation per monomial
        std::set<MPoly::Exponents> monos;
        for (const auto& s : sons)
            for (const auto& [e, c] : get(s).terms()) monos.insert(e);
        MPoly out(yv);
        for (const auto& e : monos) {
            std::vector<std::pair<long, BigRat>> pts;
            for (std::size_t j = 0; j < sons.size(); ++j) {
                auto it = get(sons[j]).terms().find(e);
                pts.emplace_back(labels[j], it == get(sons[j]).terms().end() ? BigRat(0) : it->second);
            }
            QPoly p = qinterp_checked(pts, d);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i] == 0) continue;
                MPoly::Exponents e2 = e;
                e2[depth] = static_cast<std::uint32_t>(i);
                out.add_term(e2, p[i]);
            }
        }
        return out;
    };
    SlotValues out;
    for (int k = 0; k <= d; ++k) {
        int kk = k;
        out.num.push_back(interp_slot([&](const SlotValues& s) -> const MPoly& { return s.num[kk]; }));
        out.den.push_back(interp_slot([&](const SlotValues& s) -> const MPoly& { return s.den[kk]; }));
    }
    return out;
}

// Invert the line substitution: slot polynomials c_k(y) with
// sum_k c_k(y) Y^k = Phat(y_1 Y, ..., y_{n-1} Y, Y) determine Phat, then
// shift Z_i -> J_i - a_i.
MPoly unline(const std::vector<MPoly>& slots, int n, const std::vector<long>& base,
             const std::vector<std::string>& out_vars) {
    std::vector<std::string> zv;
    for (int i = 1; i <= n; ++i) zv.push_back("Z" + std::to_string(i));
    MPoly hat(zv);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        for (const auto& [e, c] : slots[k].terms()) {
            long total = 0;
            for (auto x : e) total += x;
            if (static_cast<long>(k) < total)
                fail("verification-failure", "reconstructed slots are not polynomial in the line");
            MPoly::Exponents ze(n, 0);
            for (int i = 0; i + 1 < n; ++i) ze[i] = e[i];
            ze[n - 1] = static_cast<std::uint32_t>(k - total);
            hat.add_term(ze, c);
        }
    }
    std::vector<MPoly> images;
    for (int i = 0; i < n; ++i)
        images.push_back(MPoly::variable(out_vars, out_vars[i]) -
                         MPoly::constant(out_vars, rat(base[i])));
    return hat.substitute(images);
}

} // namespace

RatFrac reconstruct_fraction(const FracOracle& oracle, int n, int d, const EvalData& data,
                             const std::vector<std::string>& out_vars,
                             const ReconstructOptions& opts) {
    if (static_cast<int>(out_vars.size()) != n)
        fail("variable-mismatch", "need one output variable per dimension");
    if (static_cast<int>(data.base.size()) != n)
        fail("variable-mismatch", "evaluation data does not match the dimension");
    std::vector<std::string> yv = y_vars(std::max(1, n - 1));
    std::vector<long> path;
    SlotValues slots = collapse(data.tree.root, 0, n, d, data.base, oracle, yv, path);
    MPoly num = unline(slots.num, n, data.base, out_vars);
    MPoly den = unline(slots.den, n, data.base, out_vars);
    if (den.is_zero()) fail("no-solution", "reconstructed denominator is zero");
    RatFrac out(std::move(num), std::move(den), Coprimality::declared_coprime);

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> dist(-50, 50);
    int done = 0, attempts = 0;
    while (done < opts.extra_checks && attempts < 200 * opts.extra_checks) {
        ++attempts;
        std::vector<BigRat> point;
        for (int i = 0; i < n; ++i) point.push_back(rat(dist(rng)));
        BigRat dv = out.den().eval(point);
        if (dv == 0) continue;
        auto ov = oracle(point);
        if (!ov) continue;
        if (out.num().eval(point) != *ov * dv)
            fail("verification-failure", "reconstruction disagrees with the oracle");
        ++done;
    }
    if (done < opts.extra_checks)
        fail("verification-failure", "could not collect enough verification points");
    return out;
}

ReconstructRun reconstruct_known_fraction(const RatFrac& f, int d, long M,
                                          const BuildOptions& opts,
                                          const ReconstructOptions& ropts) {
    int n = static_cast<int>(f.num().vars().size());
    std::vector<long> a = choose_base_point(f.den(), M);
    std::vector<MPoly> avoid;
    if (n >= 2) {
        std::vector<std::string> yv = y_vars(n);
        MPoly num_line = substitute_line(f.num(), yv, a);
        MPoly den_line = substitute_line(f.den(), yv, a);
        if (!num_line.is_zero() && num_line.degree_in(n - 1) >= 0 &&
            (num_line.degree_in(n - 1) > 0 || den_line.degree_in(n - 1) > 0)) {
            MPoly res = resultant(num_line, den_line, yv[n - 1]);
            if (!res.is_zero()) avoid.push_back(res);
        }
    }
    EvalData data = build_tree(n, d, M, avoid, f.den(), opts);
    FracOracle oracle = [&f](const std::vector<BigRat>& point) -> std::optional<BigRat> {
        BigRat dv = f.den().eval(point);
        if (dv == 0) return std::nullopt;
        return f.num().eval(point) / dv;
    };
    RatFrac result = reconstruct_fraction(oracle, n, d, data, f.num().vars(), ropts);
    return {std::move(data), std::move(result)};
}

} // namespace modeq
