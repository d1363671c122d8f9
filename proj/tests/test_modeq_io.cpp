#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "modeq/cli.hpp"
#include "modeq/modeq_set.hpp"
#include "modeq/qexp.hpp"

using namespace modeq;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli_main(args, in, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = "modeq_test_" + std::to_string(++counter) + ".tmp";
        std::ofstream f(path);
        f << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::mt19937_64 rng(2718);

} // namespace

TEST_CASE("elliptic db parse semantics") {
    std::istringstream in("[1,0] 2\n[0,0] -3\n");
    ModularEquationSet set = parse_elliptic_db(in, 2);
    REQUIRE(set.equations.size() == 1);
    const auto& terms = set.equations[0].terms;
    // symmetry expansion: 2X + 2Y - 3
    REQUIRE(terms.size() == 2);
    bool saw_y0 = false, saw_y1 = false;
    for (const auto& t : terms) {
        if (t.y_exps[0] == 0) {
            saw_y0 = true;
            CHECK(t.coeff.num() == parse_poly("2*J1 - 3", set.j_vars));
        }
        if (t.y_exps[0] == 1) {
            saw_y1 = true;
            CHECK(t.coeff.num() == parse_poly("2", set.j_vars));
        }
    }
    CHECK(saw_y0);
    CHECK(saw_y1);
}

TEST_CASE("elliptic db errors carry line numbers") {
    std::istringstream bad("[1 0] 2\n");
    try {
        parse_elliptic_db(bad, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == "parse-error");
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }

    std::istringstream sym("[2,1] 5\n[1,2] 6\n");
    CHECK_THROWS_AS(parse_elliptic_db(sym, 2), Error);
}

TEST_CASE("gen-phi output reparses to the same polynomial") {
    MPoly phi = phi_elliptic(2);
    std::string text = format_elliptic_db(phi, 2);
    std::istringstream in(text);
    ModularEquationSet set = parse_elliptic_db(in, 2);
    // rebuild the bivariate polynomial from the parsed set
    std::vector<std::string> xy{"X", "Y"};
    MPoly back(xy);
    for (const auto& t : set.equations[0].terms) {
        for (const auto& [e, c] : t.coeff.num().terms())
            back.add_term({e[0], t.y_exps[0]}, c);
    }
    CHECK(back == phi);
}

TEST_CASE("modeq json round trip") {
    std::uniform_int_distribution<long> dc(-50, 50);
    for (int it = 0; it < 10; ++it) {
        ModularEquationSet set{HeckeFamily::siegel(2), {"J1", "J2", "J3"}, {}};
        ModeqEquation eq{1, {}};
        for (int t = 0; t < 3; ++t) {
            MPoly num(set.j_vars), den(set.j_vars);
            num.add_term({static_cast<std::uint32_t>(t), 1, 0}, rat(dc(rng)));
            num.add_term({0, 0, 0}, rat(7));
            den.add_term({0, 0, static_cast<std::uint32_t>(t)}, rat(3));
            eq.terms.push_back(
                {{static_cast<unsigned>(t)}, 0, RatFrac(num, den, Coprimality::declared_coprime)});
        }
        set.equations.push_back(eq);
        std::string text = serialize_modeq_json(set);
        std::istringstream in(text);
        ModularEquationSet back = parse_modeq_json(in);
        CHECK(back.j_vars == set.j_vars);
        REQUIRE(back.equations.size() == 1);
        REQUIRE(back.equations[0].terms.size() == set.equations[0].terms.size());
        for (std::size_t i = 0; i < eq.terms.size(); ++i) {
            CHECK(back.equations[0].terms[i].y_exps == eq.terms[i].y_exps);
            CHECK(back.equations[0].terms[i].coeff.num() == eq.terms[i].coeff.num());
            CHECK(back.equations[0].terms[i].coeff.den() == eq.terms[i].coeff.den());
        }
    }
}

TEST_CASE("modeq json schema errors") {
    std::istringstream zero_den(R"({"schema":1,"family":{"kind":"elliptic","level":2},
        "variables":["J1"],"equations":[{"m":1,"terms":[
        {"y_exps":[0],"jlast_exp":0,"num":"J1","den":"0"}]}]})");
    try {
        parse_modeq_json(zero_den);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == "schema-error");
    }

    std::istringstream undecl(R"({"schema":1,"family":{"kind":"elliptic","level":2},
        "variables":["J1"],"equations":[{"m":1,"terms":[
        {"y_exps":[0],"jlast_exp":0,"num":"J2","den":"1"}]}]})");
    try {
        parse_modeq_json(undecl);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == "undeclared-variable");
    }

    std::istringstream badschema(R"({"schema":9,"family":{},"variables":[],"equations":[]})");
    CHECK_THROWS_AS(parse_modeq_json(badschema), Error);
}

TEST_CASE("audit of generated elliptic polynomials") {
    for (long l : {2L, 3L}) {
        MPoly phi = phi_elliptic(l);
        std::istringstream in(format_elliptic_db(phi, l));
        ModularEquationSet set = parse_elliptic_db(in, l);
        AuditReport rep = audit(set);
        CHECK(rep.all_pass);
        REQUIRE(rep.per_equation.size() == 1);
        CHECK(rep.per_equation[0].max_total_degree == l + 1);
        CHECK(rep.per_equation[0].degree_bound == l + 1);
        CHECK(rep.per_equation[0].y_degree == l + 1);
        CHECK(rep.per_equation[0].y_degree_pass);
        CHECK(rep.per_equation[0].max_height > 0);
        CHECK(rep.per_equation[0].height_pass);
    }
}

TEST_CASE("audit flags a degree violation") {
    // a fake elliptic level-2 file with an X^9 monomial: bound is 3
    std::istringstream in("[9,3] 1\n[0,0] 1\n");
    ModularEquationSet set = parse_elliptic_db(in, 2);
    AuditReport rep = audit(set);
    CHECK(!rep.all_pass);
}

TEST_CASE("audit report serializes") {
    MPoly phi = phi_elliptic(2);
    std::istringstream in(format_elliptic_db(phi, 2));
    AuditReport rep = audit(parse_elliptic_db(in, 2));
    std::string text = rep.to_text();
    CHECK(text.find("ALL BOUNDS PASS") != std::string::npos);
    std::string json_text = rep.to_json();
    CHECK(json_text.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("audit of a Siegel-style JSON set reports the published bounds") {
    // a small synthetic stand-in for a Siegel level-2 database entry
    ModularEquationSet set{HeckeFamily::siegel(2), {"J1", "J2", "J3"}, {}};
    ModeqEquation eq1{1, {}};
    MPoly num(set.j_vars), den(set.j_vars);
    num.add_term({20, 2, 3}, rat(12345));
    den.add_term({0, 1, 0}, rat(1));
    eq1.terms.push_back({{15}, 0, RatFrac(num, den, Coprimality::declared_coprime)});
    set.equations.push_back(eq1);
    ModeqEquation eq2{2, {}};
    eq2.terms.push_back({{3, 1}, 0, RatFrac(num, den, Coprimality::declared_coprime)});
    set.equations.push_back(eq2);

    AuditReport rep = audit(set);
    REQUIRE(rep.per_equation.size() == 2);
    CHECK(rep.per_equation[0].degree_bound == 25);
    CHECK(rep.per_equation[1].degree_bound == 50);
    CHECK(rep.per_equation[0].y_degree_expected == 15);
    CHECK(rep.per_equation[0].degree_pass);
    CHECK(rep.per_equation[0].y_degree_pass);
    CHECK(rep.per_equation[0].height_bound > 1e15);
    CHECK(rep.all_pass);
}

TEST_CASE("cli: sgc and bounds") {
    std::string out;
    CHECK(run_cli({"sgc", "igusa"}, &out) == 0);
    CHECK(out == "1/6\n");
    CHECK(run_cli({"sgc", "gundlach_q5"}, &out) == 0);
    CHECK(out == "1/6\n");
    CHECK(run_cli({"sgc", "elliptic"}, &out) == 0);
    CHECK(out == "1/12\n");

    CHECK(run_cli({"bounds", "siegel", "2", "--m", "1"}, &out) == 0);
    CHECK(out == "25\n");
    CHECK(run_cli({"bounds", "hilbert", "6,1", "--m", "1"}, &out) == 0);
    CHECK(out == "140\n");
    CHECK(run_cli({"bounds", "elliptic", "11"}, &out) == 0);
    CHECK(out.find("degree bound 12") != std::string::npos);

    CHECK(run_cli({"bounds", "siegel", "2", "--m", "9"}, &out) == 2);
    CHECK(run_cli({"bounds", "siegel", "four"}, &out) == 2);
    CHECK(run_cli({"nonsense"}, &out) == 2);
}

TEST_CASE("cli: constants") {
    std::string out;
    CHECK(run_cli({"constants"}, &out) == 0);
    CHECK(out.find("siegel_height_coeff") != std::string::npos);
    CHECK(run_cli({"constants", "--json"}, &out) == 0);
    CHECK(out.find("\"paper_input\"") != std::string::npos);
    CHECK(out.find("\"computed\"") != std::string::npos);
}

TEST_CASE("cli: gen-phi piped into audit") {
    std::string phi_text;
    CHECK(run_cli({"gen-phi", "2"}, &phi_text) == 0);
    std::string out;
    CHECK(run_cli({"audit", "-", "--family", "elliptic", "--level", "2"}, &out, phi_text) == 0);
    CHECK(out.find("ALL BOUNDS PASS") != std::string::npos);

    // degree-violating fixture exits 1
    CHECK(run_cli({"audit", "-", "--family", "elliptic", "--level", "2"}, &out,
                  "[9,3] 1\n[0,0] 1\n") == 1);
    // parse error exits 2
    CHECK(run_cli({"audit", "-", "--family", "elliptic", "--level", "2"}, &out, "[oops\n") == 2);
    // level cap
    CHECK(run_cli({"gen-phi", "11"}, &out) == 2);
}

TEST_CASE("cli: audit a JSON file from disk") {
    ModularEquationSet set{HeckeFamily::elliptic(2), {"J1"}, {}};
    ModeqEquation eq{1, {}};
    MPoly num(set.j_vars), den(set.j_vars);
    num.add_term({3}, rat(1));
    den.add_term({0}, rat(1));
    eq.terms.push_back({{3}, 0, RatFrac(num, den, Coprimality::declared_coprime)});
    set.equations.push_back(eq);
    TempFile f(serialize_modeq_json(set));
    std::string out;
    CHECK(run_cli({"audit", f.path, "--json"}, &out) == 0);
    CHECK(out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("cli: reconstruct") {
    TempFile f(R"({"schema":1,"variables":["J1","J2"],
                   "num":"J1 + J2","den":"J1*J2 - 1"})");
    std::string out;
    CHECK(run_cli({"reconstruct", f.path}, &out) == 0);
    CHECK(out.find("EXACT RECOVERY") != std::string::npos);
    CHECK(run_cli({"reconstruct", f.path, "--n", "2", "--d", "2", "--seed", "7"}, &out) == 0);

    CHECK(run_cli({"reconstruct", f.path, "--n", "3"}, &out) == 2);  // wrong dimension
    CHECK(run_cli({"reconstruct", f.path, "--strict"}, &out) == 2); // needs family context
    CHECK(run_cli({"reconstruct", "missing.json"}, &out) == 2);
}
