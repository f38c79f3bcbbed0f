#pragma once

#include "logsine/generators.hpp"
#include "logsine/pslq.hpp"
#include "logsine/symcombo.hpp"

#include <json.hpp>

#include <string>

namespace logsine {

using Json = nlohmann::ordered_json;

inline Json index_to_json(const Index& k) {
    Json a = Json::array();
    for (int u = 0; u < k.depth(); ++u) a.push_back(k[u]);
    return a;
}

inline Index index_from_json(const Json& a) {
    std::vector<int> e;
    for (auto& v : a) e.push_back(v.get<int>());
    return Index(std::move(e));
}

/// SymCombo as a JSON array of term objects, canonical order; rationals as
/// "p/q" strings.
inline Json symcombo_to_json(const SymCombo& c) {
    Json arr = Json::array();
    for (auto& [m, coeff] : c.terms()) {
        Json t;
        t["coeff"] = Json{{"re", coeff.re.str()}, {"im", coeff.im.str()}};
        t["sigma_pow"] = m.sigma_pow;
        t["pi_pow"] = m.pi_pow;
        Json zs = Json::array();
        for (auto& z : m.zetas) zs.push_back(index_to_json(z));
        t["zetas"] = zs;
        t["li"] = m.li ? index_to_json(*m.li) : Json(nullptr);
        arr.push_back(std::move(t));
    }
    return arr;
}

inline SymCombo symcombo_from_json(const Json& arr) {
    SymCombo out;
    for (auto& t : arr) {
        Monomial m;
        m.sigma_pow = t.at("sigma_pow").get<int>();
        m.pi_pow = t.at("pi_pow").get<int>();
        for (auto& z : t.at("zetas")) m.zetas.push_back(index_from_json(z));
        if (!t.at("li").is_null()) m.li = index_from_json(t.at("li"));
        GaussRat c{parse_rational(t.at("coeff").at("re").get<std::string>()),
                   parse_rational(t.at("coeff").at("im").get<std::string>())};
        m.sort_zetas();
        out.add(m, c);
    }
    return out;
}

/// Relation report serialization. For an absence result, height_bound is
/// the height actually certified at this precision (the requested bound is
/// recorded separately), so the report never overstates what was searched.
inline Json relation_report_to_json(const std::vector<std::string>& names, const RelationReport& r) {
    Json j;
    j["basis"] = names;
    if (r.coeffs) {
        Json cs = Json::array();
        for (auto& c : *r.coeffs) cs.push_back(c.str());
        j["coeffs"] = cs;
    } else {
        j["coeffs"] = nullptr;
    }
    j["precision"] = r.precision;
    j["height_bound"] = (r.found() ? r.requested_height : r.certified_height).str();
    j["requested_height"] = r.requested_height.str();
    j["residual"] = r.residual;
    j["precision_exhausted"] = r.precision_exhausted;
    j["iterations"] = r.iterations;
    return j;
}

}  // namespace logsine
