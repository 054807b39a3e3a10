#pragma once

// JSON codec for LaurentPoly, kept apart from poly.hpp so the core headers
// stay light. Schema: {"terms": [[e_a, e_t, e_q, "coeff"], ...]} with entries
// ascending by (e_a, e_t, e_q) and coefficients as decimal strings.

#include <string>

#include <json.hpp>

#include "trisch/poly.hpp"

namespace trisch {

inline nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({k[0], k[1], k[2], c.str()});
    return nlohmann::json{{"terms", terms}};
}

inline std::string poly_to_json_text(const LaurentPoly& p) { return poly_to_json(p).dump(); }

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw Error("ParseError", "expected object with a \"terms\" array");
    LaurentPoly p;
    for (const auto& entry : j["terms"]) {
        if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_number_integer() ||
            !entry[3].is_string())
            throw Error("ParseError", "term entries must be [e_a, e_t, e_q, \"coeff\"]");
        Int c;
        try {
            c = Int(entry[3].get<std::string>());
        } catch (const std::exception& e) {
            throw Error("ParseError", std::string("bad coefficient: ") + e.what());
        }
        p += LaurentPoly::term(c, entry[2].get<int>(), entry[1].get<int>(), entry[0].get<int>());
    }
    return p;
}

inline LaurentPoly poly_from_json_text(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("ParseError", std::string(e.what()) + " at byte " + std::to_string(e.byte));
    }
    return poly_from_json(j);
}

} // namespace trisch
