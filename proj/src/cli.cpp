#include "modeq/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modeq/constants.hpp"
#include "modeq/evaltree.hpp"
#include "modeq/graded.hpp"
#include "modeq/modeq_set.hpp"
#include "modeq/presentation_io.hpp"
#include "modeq/qexp.hpp"

namespace modeq {

namespace {

HeckeFamily parse_family(const std::string& family, const std::string& level) {
    if (family == "elliptic" || family == "siegel") {
        long l = 0;
        try {
            l = std::stol(level);
        } catch (...) {
            fail("usage", "level must be a prime number");
        }
        return family == "elliptic" ? HeckeFamily::elliptic(l) : HeckeFamily::siegel(l);
    }
    if (family == "hilbert") {
        auto comma = level.find(',');
        if (comma == std::string::npos)
            fail("usage", "Hilbert levels are written a,b for beta = a + b phi");
        long a = 0, b = 0;
        try {
            a = std::stol(level.substr(0, comma));
            b = std::stol(level.substr(comma + 1));
        } catch (...) {
            fail("usage", "Hilbert levels are written a,b");
        }
        return HeckeFamily::hilbert_q5(a, b);
    }
    fail("usage", "family must be elliptic, siegel or hilbert");
}

int max_m(const HeckeFamily& fam) { return fam.invariant_count(); }

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_sgc(const std::string& name, std::ostream& out) {
    BigRat value;
    if (name == "igusa" || name == "gundlach_q5" || name == "elliptic") {
        value = sgc(builtin_presentation(name));
    } else {
        GradedPresentation pres = parse_presentation_json_file(name);
        value = sgc(pres);
    }
    out << value.get_str() << "\n";
    return 0;
}

int run_bounds(const std::string& family, const std::string& level, int m, std::ostream& out) {
    HeckeFamily fam = parse_family(family, level);
    if (m > 0) {
        if (m > max_m(fam)) fail("usage", "m out of range for this family");
        out << degree_bound(fam, m).bound_at_level.get_str() << "\n";
        return 0;
    }
    for (int k = 1; k <= max_m(fam); ++k) {
        BoundReport r = bound_report(fam, k);
        out << "m=" << k << ": degree bound " << r.degree_bound.get_str() << " (coefficient "
            << r.degree_coefficient.get_str() << " * d)";
        if (r.height_bound >= 0)
            out << ", height bound " << r.height_bound << " (" << r.height_note << ")";
        else
            out << ", height: " << r.height_note;
        out << "\n";
    }
    return 0;
}

int run_constants(bool as_json, std::ostream& out) {
    HeightConstantLedger led = full_ledger();
    if (as_json) {
        nlohmann::json doc;
        doc["schema"] = 1;
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : led.entries()) {
            entries.push_back(
                {{"name", e.name},
                 {"value", e.value},
                 {"provenance",
                  e.provenance == LedgerEntry::Provenance::computed ? "computed" : "paper_input"},
                 {"detail", e.detail}});
        }
        doc["entries"] = std::move(entries);
        out << doc.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : led.entries()) {
        out << e.name << " = " << e.value << "  ["
            << (e.provenance == LedgerEntry::Provenance::computed ? "computed" : "paper input")
            << ": " << e.detail << "]\n";
    }
    return 0;
}

int run_gen_phi(long l, long max_level, const std::string& out_path, std::ostream& out) {
    if (l > max_level)
        fail("usage", "level " + std::to_string(l) + " exceeds the default cap " +
                          std::to_string(max_level) + "; raise it with --max-level");
    MPoly phi = phi_elliptic(l);
    std::string text = format_elliptic_db(phi, l);
    if (out_path.empty() || out_path == "-") {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) fail("usage", "cannot write " + out_path);
        f << text;
    }
    return 0;
}

int run_audit(const std::string& path, const std::string& family, const std::string& level,
              bool as_json, bool paranoid, std::istream& in, std::ostream& out) {
    std::string text;
    if (path == "-") {
        text = read_all(in);
    } else {
        std::ifstream f(path);
        if (!f) fail("usage", "cannot open " + path);
        text = read_all(f);
    }
    std::size_t first = text.find_first_not_of(" \t\r\n");
    bool json_input = first != std::string::npos && text[first] == '{';
    std::istringstream stream(text);
    ModularEquationSet set = [&] {
        if (json_input) return parse_modeq_json(stream);
        if (family != "elliptic")
            fail("usage", "the text database format is elliptic; pass --family elliptic");
        long l = 0;
        try {
            l = std::stol(level);
        } catch (...) {
            fail("usage", "audit of a text database needs --level <prime>");
        }
        return parse_elliptic_db(stream, l);
    }();
    AuditReport rep = audit(set, paranoid);
    out << (as_json ? rep.to_json() + "\n" : rep.to_text());
    return rep.all_pass ? 0 : 1;
}

int run_reconstruct(const std::string& path, int n_override, int d_override, long M,
                    bool strict, const std::string& family, const std::string& level,
                    unsigned long long seed, std::istream& in, std::ostream& out) {
    nlohmann::json doc;
    try {
        if (path == "-") {
            doc = nlohmann::json::parse(read_all(in));
        } else {
            std::ifstream f(path);
            if (!f) fail("usage", "cannot open " + path);
            doc = nlohmann::json::parse(read_all(f));
        }
    } catch (const nlohmann::json::exception& e) {
        fail("schema-error", std::string("invalid JSON: ") + e.what());
    }
    std::vector<std::string> vars;
    RatFrac frac = [&] {
        try {
            if (doc.value("schema", 0) != 1) fail("schema-error", "unsupported schema version");
            vars = doc.at("variables").get<std::vector<std::string>>();
            MPoly num = parse_poly(doc.at("num").get<std::string>(), vars);
            MPoly den = parse_poly(doc.at("den").get<std::string>(), vars);
            return RatFrac(std::move(num), std::move(den), Coprimality::declared_coprime);
        } catch (const nlohmann::json::exception& e) {
            fail("schema-error", std::string("missing or mistyped field: ") + e.what());
        }
    }();
    int n = static_cast<int>(vars.size());
    if (n_override > 0 && n_override != n)
        fail("usage", "--n disagrees with the input's variable count");
    int d = std::max(frac.num().total_degree_or(0), frac.den().total_degree_or(0));
    if (d_override > 0) d = d_override;
    if (d < 1) d = 1;
    if (M <= 0) M = 10L * d * d + 50;

    BuildOptions opts;
    opts.strict = strict;
    if (strict) {
        if (family.empty())
            fail("usage",
                 "--strict needs --family/--level to evaluate the magnitude condition");
        HeckeFamily fam = parse_family(family, level);
        HeightConstantLedger led = full_ledger();
        double c_deg = led.get("c_deg").value;
        double c_eval = led.get("c_eval").value;
        double dd = mpz_get_d(hecke_degree(fam).get_mpz_t());
        double ll = mpz_get_d(isogeny_degree(fam).get_mpz_t());
        opts.B = 4.0 * std::pow(c_deg, 3.0) * c_eval * std::pow(dd, 4.0) *
                 std::max(1.0, std::log(ll));
    }
    ReconstructOptions ropts;
    ropts.seed = seed;
    ReconstructRun run = reconstruct_known_fraction(frac, d, M, opts, ropts);

    bool same = run.result.same_function(frac);
    out << "reconstruct: n=" << n << " d=" << d << " M=" << M << "\n";
    out << "  base point:";
    for (long a : run.data.base) out << " " << a;
    out << "\n  tree: N1=" << run.data.tree.N1 << " N2=" << run.data.tree.N2
        << " amplitude<=(" << run.data.tree.D1 << "," << run.data.tree.D2 << ")\n";
    out << "  excluded per level:";
    for (long e : run.data.excluded_per_level) out << " " << e;
    out << "\n  magnitude condition: "
        << (run.data.cond_magnitude == PaperScaleCondition::satisfied ? "satisfied" : "waived")
        << "\n";
    out << "  num = " << run.result.num().to_string() << "\n";
    out << "  den = " << run.result.den().to_string() << "\n";
    out << (same ? "EXACT RECOVERY" : "MISMATCH") << "\n";
    return same ? 0 : 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact degree and height bounds for modular equations"};
    app.require_subcommand(1);

    auto* c_sgc = app.add_subcommand("sgc", "symmetric geometric complexity of a presentation");
    std::string sgc_name;
    c_sgc->add_option("presentation", sgc_name,
                      "builtin name (igusa, gundlach_q5, elliptic) or a JSON file")
        ->required();

    auto* c_bounds = app.add_subcommand("bounds", "degree/height bounds for a family and level");
    std::string b_family, b_level;
    int b_m = 0;
    c_bounds->add_option("family", b_family, "elliptic | siegel | hilbert")->required();
    c_bounds->add_option("level", b_level, "prime l, or a,b for Hilbert")->required();
    c_bounds->add_option("--m", b_m, "equation index (default: all)");

    auto* c_const = app.add_subcommand("constants", "dump the explicit constant ledger");
    bool const_json = false;
    c_const->add_flag("--json", const_json, "JSON output");

    auto* c_phi = app.add_subcommand("gen-phi", "generate the elliptic modular polynomial Phi_l");
    long phi_l = 0, phi_cap = 7;
    std::string phi_out;
    c_phi->add_option("l", phi_l, "prime level")->required();
    c_phi->add_option("--out", phi_out, "output path (default: stdout)");
    c_phi->add_option("--max-level", phi_cap, "raise the default level cap (7)");

    auto* c_audit = app.add_subcommand("audit", "check a modular equation file against the bounds");
    std::string a_path, a_family = "elliptic", a_level;
    bool a_json = false, a_paranoid = false;
    c_audit->add_option("path", a_path, "input file, or - for stdin")->required();
    c_audit->add_option("--family", a_family, "family of a text database (elliptic)");
    c_audit->add_option("--level", a_level, "level of a text database");
    c_audit->add_flag("--json", a_json, "JSON report");
    c_audit->add_flag("--paranoid", a_paranoid, "re-check declared coprimality probabilistically");

    auto* c_rec = app.add_subcommand("reconstruct", "rebuild a fraction through evaluation trees");
    std::string r_path, r_family, r_level;
    int r_n = 0, r_d = 0;
    long r_M = 0;
    unsigned long long r_seed = 0x5eed;
    bool r_strict = false;
    c_rec->add_option("path", r_path, "fraction JSON, or - for stdin")->required();
    c_rec->add_option("--n", r_n, "dimension (must match the input's variables)");
    c_rec->add_option("--d", r_d, "total degree bound (default: from the input)");
    c_rec->add_option("--M", r_M, "label bound (default: 10 d^2 + 50)");
    c_rec->add_option("--seed", r_seed, "verification seed");
    c_rec->add_flag("--strict", r_strict, "enforce the paper-scale magnitude condition");
    c_rec->add_option("--family", r_family, "family context for --strict");
    c_rec->add_option("--level", r_level, "level context for --strict");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_sgc->parsed()) return run_sgc(sgc_name, out);
        if (c_bounds->parsed()) return run_bounds(b_family, b_level, b_m, out);
        if (c_const->parsed()) return run_constants(const_json, out);
        if (c_phi->parsed()) return run_gen_phi(phi_l, phi_cap, phi_out, out);
        if (c_audit->parsed())
            return run_audit(a_path, a_family, a_level, a_json, a_paranoid, in, out);
        if (c_rec->parsed())
            return run_reconstruct(r_path, r_n, r_d, r_M, r_strict, r_family, r_level, r_seed, in,
                                   out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == "usage" || e.kind() == "parse-error" || e.kind() == "schema-error" ||
            e.kind() == "undeclared-variable" || e.kind() == "symmetry-violation" ||
            e.kind() == "invalid-level" || e.kind() == "unsupported-family")
            return 2;
        return 1;
    }
    return 2;
}

} // namespace modeq
