#include "modeq/modeq_set.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "modeq/height.hpp"
#include "modeq/resultant.hpp"

namespace modeq {

using nlohmann::json;

namespace {

long env_thread_cap() {
    const char* s = std::getenv("MODEQ_THREADS");
    if (!s) return 0;
    long v = std::strtol(s, nullptr, 10);
    return v > 0 ? v : 0;
}

} // namespace

ModularEquationSet parse_elliptic_db(std::istream& in, long level) {
    std::map<std::pair<long, long>, BigInt> entries;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line.substr(pos));
        auto bad = [&](const std::string& why) {
            fail("parse-error", "line " + std::to_string(lineno) + ": " + why);
        };
        char c = 0;
        long i = 0, j = 0;
        if (!(ls >> c) || c != '[') bad("expected '['");
        if (!(ls >> i) || i < 0) bad("expected a nonnegative exponent");
        if (!(ls >> c) || c != ',') bad("expected ','");
        if (!(ls >> j) || j < 0) bad("expected a nonnegative exponent");
        if (!(ls >> c) || c != ']') bad("expected ']'");
        std::string coeff;
        if (!(ls >> coeff)) bad("expected a coefficient");
        std::string rest;
        if (ls >> rest) bad("trailing tokens");
        BigInt value;
        if (mpz_set_str(value.get_mpz_t(), coeff.c_str(), 10) != 0) bad("bad integer coefficient");
        if (entries.count({i, j})) bad("duplicate monomial");
        entries[{i, j}] = value;
    }
    // Expand Phi(X,Y) = Phi(Y,X); both orders present must agree.
    std::map<std::pair<long, long>, BigInt> full;
    for (const auto& [ij, c] : entries) {
        auto sym = std::make_pair(ij.second, ij.first);
        auto it = entries.find(sym);
        if (it != entries.end() && it->second != c)
            fail("symmetry-violation", "monomials [" + std::to_string(ij.first) + "," +
                                           std::to_string(ij.second) + "] disagree");
        full[ij] = c;
        full[sym] = c;
    }

    ModularEquationSet set{HeckeFamily::elliptic(level), {"J1"}, {}};
    std::map<long, MPoly> by_ypow;
    for (const auto& [ij, c] : full) {
        auto [i, j] = ij;
        auto it = by_ypow.find(j);
        if (it == by_ypow.end()) it = by_ypow.emplace(j, MPoly(set.j_vars)).first;
        it->second.add_term({static_cast<std::uint32_t>(i)}, BigRat(c));
    }
    ModeqEquation eq{1, {}};
    for (auto& [j, poly] : by_ypow) {
        if (poly.is_zero()) continue;
        eq.terms.push_back({{static_cast<unsigned>(j)}, 0, RatFrac::from_poly(poly)});
    }
    set.equations.push_back(std::move(eq));
    return set;
}

ModularEquationSet parse_elliptic_db_file(const std::string& path, long level) {
    std::ifstream in(path);
    if (!in) fail("parse-error", "cannot open " + path);
    return parse_elliptic_db(in, level);
}

std::string format_elliptic_db(const MPoly& phi, long level) {
    if (phi.vars().size() != 2) fail("schema-error", "elliptic format needs a bivariate polynomial");
    if (!phi.has_integer_coeffs()) fail("schema-error", "elliptic format needs integer coefficients");
    std::ostringstream os;
    os << "# elliptic modular polynomial, level " << level << "\n";
    os << "# [i,j] c  means  c * X^i Y^j (+ symmetric term)\n";
    for (const auto& [e, c] : phi.terms()) {
        long i = e[0], j = e[1];
        if (i < j) continue; // the symmetric half is implied
        os << "[" << i << "," << j << "] " << c.get_num().get_str() << "\n";
    }
    return os.str();
}

namespace {

HeckeFamily family_from_json(const json& f) {
    if (!f.is_object() || !f.contains("kind"))
        fail("schema-error", "family must be an object with a kind");
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "elliptic") return HeckeFamily::elliptic(f.at("level").get<long>());
    if (kind == "siegel") return HeckeFamily::siegel(f.at("level").get<long>());
    if (kind == "hilbert") return HeckeFamily::hilbert_q5(f.at("a").get<long>(), f.at("b").get<long>());
    fail("schema-error", "unknown family kind '" + kind + "'");
}

json family_to_json(const HeckeFamily& fam) {
    json f;
    f["kind"] = fam.name();
    if (fam.is_elliptic()) f["level"] = std::get<EllipticLevel1>(fam.kind()).l;
    if (fam.is_siegel()) f["level"] = std::get<SiegelIgusa>(fam.kind()).l;
    if (fam.is_hilbert()) {
        const auto& h = std::get<HilbertGundlachQ5>(fam.kind());
        f["a"] = h.a;
        f["b"] = h.b;
    }
    return f;
}

} // namespace

ModularEquationSet parse_modeq_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail("schema-error", std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) fail("schema-error", "top level must be an object");
        if (doc.value("schema", 0) != 1) fail("schema-error", "unsupported schema version");
        ModularEquationSet set{family_from_json(doc.at("family")),
                               doc.at("variables").get<std::vector<std::string>>(),
                               {}};
        if (set.j_vars.empty()) fail("schema-error", "variables must be nonempty");
        for (const json& jeq : doc.at("equations")) {
            ModeqEquation eq;
            eq.m = jeq.at("m").get<int>();
            if (eq.m < 1) fail("schema-error", "equation index m must be >= 1");
            for (const json& jt : jeq.at("terms")) {
                ModeqTerm t;
                t.y_exps = jt.at("y_exps").get<std::vector<unsigned>>();
                if (t.y_exps.size() != static_cast<std::size_t>(eq.m))
                    fail("schema-error", "y_exps must have length m");
                t.jlast_exp = jt.value("jlast_exp", 0u);
                MPoly num = parse_poly(jt.at("num").get<std::string>(), set.j_vars);
                MPoly den = parse_poly(jt.at("den").get<std::string>(), set.j_vars);
                if (den.is_zero()) fail("schema-error", "denominator must be nonzero");
                t.coeff = RatFrac(std::move(num), std::move(den), Coprimality::declared_coprime);
                eq.terms.push_back(std::move(t));
            }
            set.equations.push_back(std::move(eq));
        }
        return set;
    } catch (const json::exception& e) {
        fail("schema-error", std::string("missing or mistyped field: ") + e.what());
    }
}

ModularEquationSet parse_modeq_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("schema-error", "cannot open " + path);
    return parse_modeq_json(in);
}

std::string serialize_modeq_json(const ModularEquationSet& set) {
    json doc;
    doc["schema"] = 1;
    doc["family"] = family_to_json(set.family);
    doc["variables"] = set.j_vars;
    json eqs = json::array();
    for (const auto& eq : set.equations) {
        json je;
        je["m"] = eq.m;
        json terms = json::array();
        for (const auto& t : eq.terms) {
            json jt;
            jt["y_exps"] = t.y_exps;
            jt["jlast_exp"] = t.jlast_exp;
            jt["num"] = t.coeff.num().to_string();
            jt["den"] = t.coeff.den().to_string();
            terms.push_back(std::move(jt));
        }
        je["terms"] = std::move(terms);
        eqs.push_back(std::move(je));
    }
    doc["equations"] = std::move(eqs);
    return doc.dump(2);
}

namespace {

// Probabilistic coprimality re-check: restrict to random lines and look for
// a shared root through the univariate gcd.
bool coprime_on_random_lines(const RatFrac& f, int samples) {
    if (f.num().vars().size() < 2) {
        MPoly g = gcd_univariate(f.num(), f.den());
        return g.total_degree_or(0) == 0;
    }
    std::mt19937_64 rng(0xc0ffee);
    std::uniform_int_distribution<long long> dist(-(1ll << 62), 1ll << 62);
    std::vector<std::string> uv{"T"};
    for (int s = 0; s < samples; ++s) {
        std::vector<MPoly> images;
        for (std::size_t i = 0; i < f.num().vars().size(); ++i) {
            BigRat d(static_cast<long>(dist(rng)));
            BigRat o(static_cast<long>(dist(rng)));
            images.push_back(MPoly::variable(uv, "T") * d + MPoly::constant(uv, o));
        }
        MPoly nl = f.num().substitute(images);
        MPoly dl = f.den().substitute(images);
        if (nl.is_zero() || dl.is_zero()) continue;
        if (gcd_univariate(nl, dl).total_degree_or(0) > 0) return false;
    }
    return true;
}

} // namespace

AuditReport audit(const ModularEquationSet& set, bool paranoid) {
    auto t0 = std::chrono::steady_clock::now();
    AuditReport rep;
    rep.family = set.family.name();
    rep.level = set.family.level_string();
    BigInt d_delta = hecke_degree(set.family);

    struct Job {
        const ModeqTerm* term;
        int m;
    };
    std::vector<Job> jobs;
    for (const auto& eq : set.equations)
        for (const auto& t : eq.terms) jobs.push_back({&t, eq.m});
    rep.rows.resize(jobs.size());

    auto work = [&](std::size_t idx) {
        const Job& job = jobs[idx];
        AuditRow row;
        row.m = job.m;
        row.y_exps = job.term->y_exps;
        row.jlast_exp = job.term->jlast_exp;
        const RatFrac& c = job.term->coeff;
        row.total_degree = std::max(c.num().total_degree_or(0), c.den().total_degree_or(0));
        for (std::size_t v = 0; v < set.j_vars.size(); ++v)
            row.var_degrees.push_back(std::max(c.num().degree_in(v), c.den().degree_in(v)));
        try {
            if (paranoid && !coprime_on_random_lines(c, 32)) {
                row.height_known = false;
                row.note = "coprimality check failed on a random line";
            } else {
                row.height = height_frac(c).value;
            }
        } catch (const Error& e) {
            row.height_known = false;
            row.note = e.what();
        }
        rep.rows[idx] = std::move(row);
    };

    long cap = env_thread_cap();
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = std::max<std::size_t>(1, cap > 0 ? cap : (hw ? hw : 1));
    nthreads = std::min(nthreads, jobs.size() ? jobs.size() : 1);
    if (nthreads <= 1 || jobs.size() < 2) {
        for (std::size_t i = 0; i < jobs.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(jobs.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) work(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& eq : set.equations) {
        AuditReport::PerEquation pe;
        pe.m = eq.m;
        BoundReport br = bound_report(set.family, eq.m);
        pe.degree_bound = br.degree_bound;
        pe.height_bound = br.height_bound;
        pe.height_note = br.height_note;
        pe.y_degree_expected = eq.m == 1 ? d_delta : BigInt(1);
        for (const auto& row : rep.rows) {
            if (row.m != eq.m) continue;
            pe.max_total_degree = std::max(pe.max_total_degree, row.total_degree);
            if (row.height_known) pe.max_height = std::max(pe.max_height, row.height);
            if (!row.y_exps.empty())
                pe.y_degree = std::max(pe.y_degree, static_cast<int>(row.y_exps[eq.m - 1]));
        }
        pe.degree_pass = BigInt(pe.max_total_degree) <= pe.degree_bound;
        if (eq.m == 1) {
            pe.y_degree_pass = BigInt(pe.y_degree) == pe.y_degree_expected;
        } else {
            pe.y_degree_pass = BigInt(pe.y_degree) <= pe.y_degree_expected;
            // the Y_1 degree of later equations stays below d(delta)
            for (const auto& row : rep.rows) {
                if (row.m != eq.m || row.y_exps.empty()) continue;
                if (BigInt(static_cast<long>(row.y_exps[0])) >= d_delta) pe.y_degree_pass = false;
            }
        }
        pe.height_pass = pe.height_bound < 0 || pe.max_height <= pe.height_bound;
        rep.all_pass = rep.all_pass && pe.degree_pass && pe.y_degree_pass && pe.height_pass;
        rep.per_equation.push_back(std::move(pe));
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    os << "audit: family=" << family << " level=" << level << "\n";
    os << "  m  monomial           totdeg  height\n";
    for (const auto& row : rows) {
        std::ostringstream mono;
        mono << "Y^(";
        for (std::size_t i = 0; i < row.y_exps.size(); ++i)
            mono << (i ? "," : "") << row.y_exps[i];
        mono << ")";
        if (row.jlast_exp) mono << " Jl^" << row.jlast_exp;
        os << "  " << row.m << "  " << mono.str();
        for (std::size_t i = mono.str().size(); i < 19; ++i) os << ' ';
        os << row.total_degree << "  ";
        if (row.height_known)
            os << row.height;
        else
            os << "unknown (" << row.note << ")";
        os << "\n";
    }
    for (const auto& pe : per_equation) {
        os << "m=" << pe.m << ": max total degree " << pe.max_total_degree << " / bound "
           << pe.degree_bound.get_str() << " [" << (pe.degree_pass ? "pass" : "FAIL") << "]";
        os << ", deg_Y" << pe.m << " = " << pe.y_degree << " (expected "
           << (pe.m == 1 ? "= " : "<= ") << pe.y_degree_expected.get_str() << ") ["
           << (pe.y_degree_pass ? "pass" : "FAIL") << "]";
        if (pe.height_bound >= 0) {
            os << ", max height " << pe.max_height << " / bound " << pe.height_bound << " ["
               << (pe.height_pass ? "pass" : "FAIL") << "]";
        } else {
            os << ", max height " << pe.max_height << " (" << pe.height_note << ")";
        }
        os << "\n";
    }
    os << (all_pass ? "ALL BOUNDS PASS" : "BOUND VIOLATION") << " (" << elapsed_seconds << " s)\n";
    return os.str();
}

std::string AuditReport::to_json() const {
    json doc;
    doc["schema"] = 1;
    doc["family"] = family;
    doc["level"] = level;
    doc["all_pass"] = all_pass;
    doc["elapsed_seconds"] = elapsed_seconds;
    json jrows = json::array();
    for (const auto& row : rows) {
        json r;
        r["m"] = row.m;
        r["y_exps"] = row.y_exps;
        r["jlast_exp"] = row.jlast_exp;
        r["total_degree"] = row.total_degree;
        r["var_degrees"] = row.var_degrees;
        if (row.height_known)
            r["height"] = row.height;
        else
            r["height_note"] = row.note;
        jrows.push_back(std::move(r));
    }
    doc["rows"] = std::move(jrows);
    json jpe = json::array();
    for (const auto& pe : per_equation) {
        json p;
        p["m"] = pe.m;
        p["max_total_degree"] = pe.max_total_degree;
        p["degree_bound"] = pe.degree_bound.get_str();
        p["degree_pass"] = pe.degree_pass;
        p["y_degree"] = pe.y_degree;
        p["y_degree_expected"] = pe.y_degree_expected.get_str();
        p["y_degree_pass"] = pe.y_degree_pass;
        p["max_height"] = pe.max_height;
        if (pe.height_bound >= 0)
            p["height_bound"] = pe.height_bound;
        else
            p["height_note"] = pe.height_note;
        p["height_pass"] = pe.height_pass;
        jpe.push_back(std::move(p));
    }
    doc["per_equation"] = std::move(jpe);
    return doc.dump(2);
}

} // namespace modeq
