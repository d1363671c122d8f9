#include "modeq/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace modeq {

using nlohmann::json;

namespace {

MPoly::Exponents monomial_exponents(const std::string& text,
                                    const std::vector<std::string>& vars) {
    MPoly p = parse_poly(text, vars);
    if (p.terms().size() != 1 || p.terms().begin()->second != 1)
        fail("schema-error", "'" + text + "' must be a single monomial with coefficient 1");
    return p.terms().begin()->first;
}

std::string exponents_to_string(const MPoly::Exponents& e, const std::vector<std::string>& vars) {
    return MPoly::monomial(vars, e, BigRat(1)).to_string();
}

} // namespace

GradedPresentation parse_presentation_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail("schema-error", std::string("invalid JSON: ") + e.what());
    }
    try {
        if (doc.value("schema", 0) != 1) fail("schema-error", "unsupported schema version");
        std::vector<GradedPresentation::Generator> gens;
        std::vector<std::string> gv;
        for (const json& g : doc.at("generators")) {
            gens.push_back({g.at("name").get<std::string>(), g.at("weight").get<int>()});
            gv.push_back(gens.back().name);
        }
        std::vector<std::string> jv = doc.at("inv_vars").get<std::vector<std::string>>();
        std::vector<GradedPresentation::Invariant> invs;
        for (const json& i : doc.at("invariants")) {
            invs.push_back({i.at("name").get<std::string>(),
                            parse_poly(i.at("num").get<std::string>(), gv),
                            parse_poly(i.at("den").get<std::string>(), gv)});
        }
        std::vector<GradedRelation> rels;
        for (const json& r : doc.at("relations")) {
            GradedRelation rel;
            rel.beta = r.at("beta").get<int>();
            rel.xi = monomial_exponents(r.at("xi").get<std::string>(), gv);
            rel.lambda = monomial_exponents(r.at("lambda").get<std::string>(), gv);
            rel.P = parse_poly(r.at("P").get<std::string>(), jv);
            rel.Q = parse_poly(r.at("Q").get<std::string>(), jv);
            rels.push_back(std::move(rel));
        }
        MPoly E = parse_poly(doc.at("E").get<std::string>(), jv);
        GcCase tag = doc.at("case").get<int>() == 1 ? GcCase::case1 : GcCase::case2;
        std::vector<std::optional<RatFrac>> elim(gens.size());
        if (doc.contains("elimination")) {
            for (auto it = doc["elimination"].begin(); it != doc["elimination"].end(); ++it) {
                std::size_t idx = gens.size();
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (gens[i].name == it.key()) idx = i;
                if (idx == gens.size())
                    fail("schema-error", "elimination of unknown generator " + it.key());
                elim[idx] = RatFrac(parse_poly(it.value().at("num").get<std::string>(), gv),
                                    parse_poly(it.value().at("den").get<std::string>(), gv));
            }
        }
        return GradedPresentation(std::move(gens), std::move(invs), std::move(rels), std::move(E),
                                  tag, std::move(elim));
    } catch (const json::exception& e) {
        fail("schema-error", std::string("missing or mistyped field: ") + e.what());
    }
}

GradedPresentation parse_presentation_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("schema-error", "cannot open " + path);
    return parse_presentation_json(in);
}

std::string serialize_presentation_json(const GradedPresentation& pres) {
    json doc;
    doc["schema"] = 1;
    doc["case"] = pres.case_tag() == GcCase::case1 ? 1 : 2;
    json gens = json::array();
    for (const auto& g : pres.generators()) gens.push_back({{"name", g.name}, {"weight", g.weight}});
    doc["generators"] = std::move(gens);
    doc["inv_vars"] = pres.inv_vars();
    json invs = json::array();
    for (const auto& i : pres.invariants())
        invs.push_back({{"name", i.name}, {"num", i.num.to_string()}, {"den", i.den.to_string()}});
    doc["invariants"] = std::move(invs);
    json rels = json::array();
    for (const auto& r : pres.relations()) {
        rels.push_back({{"beta", r.beta},
                        {"xi", exponents_to_string(r.xi, pres.gen_vars())},
                        {"lambda", exponents_to_string(r.lambda, pres.gen_vars())},
                        {"P", r.P.to_string()},
                        {"Q", r.Q.to_string()}});
    }
    doc["relations"] = std::move(rels);
    doc["E"] = pres.relation_poly().to_string();
    for (std::size_t i = 0; i < pres.eliminations().size(); ++i) {
        if (!pres.eliminations()[i]) continue;
        doc["elimination"][pres.generators()[i].name] = {
            {"num", pres.eliminations()[i]->num().to_string()},
            {"den", pres.eliminations()[i]->den().to_string()}};
    }
    return doc.dump(2);
}

} // namespace modeq
