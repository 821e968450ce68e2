#pragma once

/**
 * @file serialize.hpp
 * @brief JSON encodings of polynomials, weights and transition matrices.
 *
 * A polynomial is an array of {"p": int, "q": int, "c": "decimal"} objects in
 * ascending (deg_p, deg_q) order. Objects use nlohmann's sorted-key storage,
 * so dump() output is a function of the value alone.
 */

#include "weylpq/hall.hpp"
#include "weylpq/poly.hpp"
#include "weylpq/rootsys.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylpq {

using Json = nlohmann::json;

inline Json to_json(const BiPoly& f) {
    Json arr = Json::array();
    for (const auto& t : f.terms()) arr.push_back(Json{{"p", t.p}, {"q", t.q}, {"c", t.c.str()}});
    return arr;
}

inline BiPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<BiPoly::Term> terms;
    for (const auto& t : j) {
        terms.push_back({t.at("p").get<std::uint32_t>(), t.at("q").get<std::uint32_t>(),
                         Integer(t.at("c").get<std::string>().c_str())});
    }
    BiPoly f = BiPoly::from_terms(terms);
    if (f.size() != terms.size()) throw std::invalid_argument("polynomial JSON is not canonical");
    return f;
}

inline Json to_json(const Weight& v) { return Json(v.to_vector()); }

inline Json to_json(const TransitionMatrix& m) {
    Json labels = Json::array(), rows = Json::array();
    for (const auto& l : m.labels) labels.push_back(to_json(l));
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        rows.push_back(std::move(r));
    }
    return Json{{"labels", labels}, {"entries", rows}};
}

inline Json to_json(const std::map<Weight, long long>& m) {
    Json arr = Json::array();
    for (const auto& [w, c] : m) arr.push_back(Json{{"weight", to_json(w)}, {"mult", c}});
    return arr;
}

}  // namespace weylpq
