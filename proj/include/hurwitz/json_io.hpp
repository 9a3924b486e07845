#pragma once

#include <json.hpp>

#include <string>

#include "hurwitz/chamber.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/trees.hpp"

namespace hurwitz {

// Insertion-ordered JSON keeps emitted documents byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["vars"] = {{"m", p.vars().m}, {"n", p.vars().n}};
    j["terms"] = Json::array();
    for (const auto& [mon, coef] : p.terms()) {
        Json t;
        t["exp"] = mon;
        t["coef"] = rat_str(coef);
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline MultiPoly poly_from_json(const Json& j) {
    VarSpec vars{j.at("vars").at("m").get<int>(), j.at("vars").at("n").get<int>()};
    MultiPoly p(vars);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<Monomial>(), parse_rational(t.at("coef").get<std::string>()));
    return p;
}

inline Json rat_vector_to_json(const std::vector<Rat>& v) {
    Json j = Json::array();
    for (const Rat& r : v) j.push_back(rat_str(r));
    return j;
}

inline Json chamber_to_json(const ChamberSignature& sig, const ConePoint& witness) {
    Json j;
    j["m"] = sig.m;
    j["n"] = sig.n;
    j["resonances"] = Json::array();
    for (const Resonance& r : list_resonances(sig.m, sig.n))
        j["resonances"].push_back(Json{{"I", r.I}, {"J", r.J}});
    j["signature"] = sig.signs;
    j["witness"] = {{"x", rat_vector_to_json(witness.x)}, {"y", rat_vector_to_json(witness.y)}};
    return j;
}

inline Json tree_to_json(const GeometricTree& t) {
    Json j;
    j["mu_blocks"] = t.mu_blocks;
    j["nu_blocks"] = t.nu_blocks;
    j["edges"] = Json::array();
    for (const auto& [a, b, w] : t.edges) j["edges"].push_back(Json::array({a, b, std::to_string(w)}));
    return j;
}

inline Json star_to_json(const EssentialStar& s) {
    Json j;
    j["white"] = s.white;
    j["black"] = Json::array();
    for (const auto& b : s.black) j["black"].push_back(Json{{"I", b.I}, {"J", b.J}});
    return j;
}

inline Json result_to_json(const HurwitzPair& pair, const Rat& value, Method method,
                           const std::string& signature = {},
                           const MultiPoly* polynomial = nullptr) {
    Json j;
    j["mu"] = pair.mu.parts();
    j["nu"] = pair.nu.parts();
    j["d"] = pair.d;
    j["r"] = pair.r;
    j["value"] = rat_str(value);
    j["method"] = method_name(method);
    if (!signature.empty()) j["signature"] = signature;
    if (polynomial) j["polynomial"] = poly_to_json(*polynomial);
    return j;
}

}  // namespace hurwitz
