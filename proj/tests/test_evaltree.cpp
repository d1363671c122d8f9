#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "modeq/evaltree.hpp"
#include "modeq/resultant.hpp"

using namespace modeq;

namespace {

std::mt19937_64 rng(31415);

MPoly P(const std::string& s, const std::vector<std::string>& vars) {
    return parse_poly(s, vars);
}

RatFrac random_fraction(int n, int d, long coeff_range) {
    std::vector<std::string> jv;
    for (int i = 1; i <= n; ++i) jv.push_back("J" + std::to_string(i));
    std::uniform_int_distribution<long> dc(-coeff_range, coeff_range);
    std::uniform_int_distribution<int> dd(0, d);
    auto rnd = [&](int terms) {
        MPoly p(jv);
        for (int t = 0; t < terms; ++t) {
            MPoly::Exponents e(n, 0);
            int budget = dd(rng);
            for (int i = 0; i < n && budget > 0; ++i) {
                std::uniform_int_distribution<int> dp(0, budget);
                int x = dp(rng);
                e[i] = static_cast<std::uint32_t>(x);
                budget -= x;
            }
            long c = dc(rng);
            if (c) p.add_term(e, rat(c));
        }
        return p;
    };
    MPoly num = rnd(4);
    MPoly den(jv);
    while (den.is_zero()) den = rnd(3);
    // force nonzero constant terms: random pairs with them share a factor
    // only on a measure-zero coefficient coincidence
    MPoly::Exponents zero(n, 0);
    if (num.terms().find(zero) == num.terms().end()) num.add_term(zero, rat(3));
    if (den.terms().find(zero) == den.terms().end()) den.add_term(zero, rat(5));
    return RatFrac(num, den, Coprimality::declared_coprime);
}

} // namespace

TEST_CASE("build_tree basics for n = 1") {
    std::vector<std::string> y1{"Y1"};
    std::vector<std::string> j1{"J1"};
    EvalData data = build_tree(1, 1, 100, {P("Y1", y1)}, P("1", j1));
    CHECK(data.base == std::vector<long>{0});
    for (const auto& son : data.tree.root.sons) CHECK(son.label != 0);
    CHECK(data.tree.root.sons.size() == 4); // N2 = 2d + 2
    data.tree.check_structure();
}

TEST_CASE("build_tree window scan for n = 2") {
    std::vector<std::string> y2{"Y1", "Y2"};
    std::vector<std::string> j2{"J1", "J2"};
    EvalData data = build_tree(2, 2, 1000, {P("Y1 - 1", y2)}, P("1", j2));
    CHECK(data.tree.N1 == 4);
    CHECK(data.tree.root.sons.size() == 4);
    long lo = data.tree.root.sons.front().label, hi = lo;
    for (const auto& son : data.tree.root.sons) {
        CHECK(son.label != 1);
        lo = std::min(lo, son.label);
        hi = std::max(hi, son.label);
    }
    CHECK(hi - lo <= 8); // amplitude 4d
    data.tree.check_structure();
}

TEST_CASE("base point avoids the denominator") {
    std::vector<std::string> j1{"J1"};
    EvalData data = build_tree(1, 1, 100, {}, P("J1", j1));
    CHECK(data.base.size() == 1);
    CHECK(data.base[0] != 0);

    std::vector<std::string> j2{"J1", "J2"};
    EvalData d2 = build_tree(2, 1, 100, {}, P("J1*J2 - J1", j2));
    CHECK(d2.base[0] != 0); // J1 = 0 kills the polynomial
    CHECK(d2.base[1] != 1); // then J2 = 1 kills it
}

TEST_CASE("tree structural invariants over random avoid sets") {
    std::uniform_int_distribution<int> dn(1, 3), dd(1, 3);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (int it = 0; it < 25; ++it) {
        int n = dn(rng), d = dd(rng);
        std::vector<std::string> yv;
        for (int i = 1; i <= n; ++i) yv.push_back("Y" + std::to_string(i));
        std::vector<std::string> jv;
        for (int i = 1; i <= n; ++i) jv.push_back("J" + std::to_string(i));
        std::vector<MPoly> avoid;
        for (int k = 0; k < 2; ++k) {
            MPoly p(yv);
            for (int t = 0; t < 3; ++t) {
                MPoly::Exponents e(n, 0);
                for (int i = 0; i < n; ++i) {
                    std::uniform_int_distribution<int> dp(0, 1);
                    e[i] = static_cast<std::uint32_t>(dp(rng));
                }
                long c = dc(rng);
                if (c) p.add_term(e, rat(c));
            }
            if (!p.is_zero()) avoid.push_back(p);
        }
        EvalData data = build_tree(n, d, 4000, avoid, P("1", jv));
        data.tree.check_structure();
    }
}

TEST_CASE("exclusion counts against the Siegel-shaped budget") {
    // one avoid polynomial of degree 4d^2 + 2 c_locus d(delta) in Y1:
    // the greedy scan can never exclude more labels than its degree
    int d = 2;
    long dmax = 4L * d * d + 2L * 15L * 15L; // 466
    std::vector<std::string> y2{"Y1", "Y2"};
    MPoly big = P("1", y2);
    for (long r = 0; r < dmax; ++r)
        big = big * (P("Y1", y2) - MPoly::constant(y2, rat(r)));
    std::vector<std::string> j2{"J1", "J2"};
    EvalData data = build_tree(2, d, 10000, {big}, P("1", j2));
    CHECK(data.excluded_per_level[0] <= dmax);
    data.tree.check_structure();
}

TEST_CASE("strict mode records the magnitude condition") {
    std::vector<std::string> j1{"J1"};
    BuildOptions opts;
    opts.strict = true;
    opts.B = 2.0; // toy value: M >= 2*2*log^2(3) ~ 4.83
    EvalData data = build_tree(1, 1, 50, {}, P("1", j1), opts);
    CHECK(data.cond_magnitude == PaperScaleCondition::satisfied);
    CHECK(data.tree.root.sons.size() >= 50); // N2 >= M in strict mode

    BuildOptions fail_opts;
    fail_opts.strict = true;
    fail_opts.B = 1e6;
    CHECK_THROWS_AS(build_tree(1, 1, 50, {}, P("1", j1), fail_opts), Error);

    BuildOptions no_b;
    no_b.strict = true;
    CHECK_THROWS_AS(build_tree(1, 1, 50, {}, P("1", j1), no_b), Error);

    EvalData waived = build_tree(1, 1, 50, {}, P("1", j1));
    CHECK(waived.cond_magnitude == PaperScaleCondition::waived);
}

TEST_CASE("line restriction") {
    std::vector<std::string> j2{"J1", "J2"};
    RatFrac f(P("J1", j2), P("J2", j2), Coprimality::declared_coprime);
    RatFrac r = line_restrict(f, {2}, {0, 0});
    // J1/J2 on the line (2Y, Y) is the constant 2
    std::vector<std::string> y{"Y"};
    CHECK(r.same_function(RatFrac(P("2", y), P("1", y))));

    RatFrac g(P("J1", j2), P("1", j2), Coprimality::declared_coprime);
    RatFrac r2 = line_restrict(g, {1}, {3, 0});
    CHECK(r2.num() == P("Y + 3", y));

    RatFrac c(P("7", j2), P("1", j2), Coprimality::declared_coprime);
    CHECK(line_restrict(c, {5}, {1, 2}).num() == P("7", y));
}

TEST_CASE("cauchy interpolation") {
    // samples of 1/(Y - 1) at 2, 3, 4, 5
    std::vector<std::pair<long, BigRat>> pts;
    for (long x : {2L, 3L, 4L, 5L}) pts.emplace_back(x, rat(1, x - 1));
    RatFrac r = cauchy_interpolate(pts, 0, 1);
    std::vector<std::string> y{"Y"};
    CHECK(r.same_function(RatFrac(P("1", y), P("Y - 1", y))));

    // polynomial data degenerates to Lagrange interpolation
    std::vector<std::pair<long, BigRat>> poly_pts;
    for (long x : {-1L, 0L, 1L, 2L}) poly_pts.emplace_back(x, rat(x * x + 1));
    RatFrac p = cauchy_interpolate(poly_pts, 2, 0);
    CHECK(p.num() == P("Y^2 + 1", y));
    CHECK(p.den() == P("1", y));

    // inconsistent data with bounds (0, 0)
    std::vector<std::pair<long, BigRat>> bad{{0, rat(1)}, {1, rat(2)}};
    CHECK_THROWS_AS(cauchy_interpolate(bad, 0, 0), Error);
    try {
        cauchy_interpolate(bad, 0, 0);
    } catch (const Error& e) {
        CHECK(e.kind() == "no-solution");
    }
}

TEST_CASE("reconstruct the spec fractions") {
    std::vector<std::string> j2{"J1", "J2"};
    RatFrac f(P("J1 + J2", j2), P("J1*J2 - 1", j2), Coprimality::declared_coprime);
    ReconstructRun run = reconstruct_known_fraction(f, 2, 1000);
    CHECK(run.result.same_function(f));
    CHECK(run.result.num() == f.num());
    CHECK(run.result.den() == f.den());

    std::vector<std::string> j1{"J1"};
    RatFrac five(P("5", j1), P("1", j1), Coprimality::declared_coprime);
    ReconstructRun c = reconstruct_known_fraction(five, 1, 100);
    CHECK(c.result.same_function(five));

    std::vector<std::string> j3{"J1", "J2", "J3"};
    RatFrac g(P("J1^2*J3", j3), P("J2 + 7", j3), Coprimality::declared_coprime);
    ReconstructRun r3 = reconstruct_known_fraction(g, 3, 2000);
    CHECK(r3.result.same_function(g));
    CHECK(r3.result.num() == g.num());
    CHECK(r3.result.den() == g.den());
}

TEST_CASE("round trip on random fractions") {
    std::uniform_int_distribution<int> dn(1, 3), dd(1, 4);
    int done = 0;
    while (done < 50) {
        int n = dn(rng), d = dd(rng);
        RatFrac f = random_fraction(n, d, 1000);
        if (f.num().is_zero()) continue;
        int deg = std::max(f.num().total_degree_or(0), f.den().total_degree_or(0));
        if (deg < 1) continue;
        ReconstructRun run;
        try {
            run = reconstruct_known_fraction(f, deg, 20000);
        } catch (const Error& e) {
            // a random pair can share a factor; the driver then cannot
            // promise structural recovery, which the next draw covers
            continue;
        }
        ++done;
        CHECK(run.result.same_function(f));
        CHECK(run.result.num() == f.num());
        CHECK(run.result.den() == f.den());
    }
}

TEST_CASE("undersized degree bounds produce no-solution, never a wrong answer") {
    std::vector<std::string> y{"Y"};
    // 12 samples of a degree-(2,2) fraction, reconstructed with bounds (1,1)
    MPoly num = P("Y^2 + 3", y);
    MPoly den = P("Y^2 - Y + 1", y);
    std::vector<std::pair<long, BigRat>> pts;
    for (long x = 2; x < 14; ++x) pts.emplace_back(x, num.eval({rat(x)}) / den.eval({rat(x)}));
    CHECK_THROWS_AS(cauchy_interpolate(pts, 1, 1), Error);
    try {
        cauchy_interpolate(pts, 1, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == "no-solution");
    }

    // oracle of degree 3 driven through a d = 2 reconstruction
    std::vector<std::string> j2{"J1", "J2"};
    RatFrac f(P("J1^3 + J2", j2), P("1", j2), Coprimality::declared_coprime);
    bool wrong_answer = false;
    try {
        ReconstructRun run = reconstruct_known_fraction(f, 2, 1000);
        wrong_answer = !run.result.same_function(f);
    } catch (const Error&) {
        // rejected: fine
    }
    CHECK(!wrong_answer);
}
