#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "halltab/config.hpp"
#include "halltab/errors.hpp"
#include "halltab/family.hpp"
#include "halltab/numeric.hpp"
#include "halltab/shapes.hpp"
#include "halltab/shellability.hpp"

namespace halltab {

using json = nlohmann::json;

/** Parses a JSON document, mapping syntax errors to invalid_input. */
inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed JSON: ") + e.what());
    }
}

namespace detail {

inline const json& require_field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw invalid_input(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

inline int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw invalid_input(std::string(what) + ": expected an integer");
    return j.get<int>();
}

inline std::vector<int> require_int_array(const json& j, const char* what) {
    if (!j.is_array())
        throw invalid_input(std::string(what) + ": expected an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(require_int(v, what));
    return out;
}

} // namespace detail

// ---- family: {"n": <int>, "members": [[<int>...], ...]} ----

inline json family_to_json(const set_family& fam) {
    json members = json::array();
    for (const auto& m : fam.members()) members.push_back(m);
    return json{{"n", fam.ground_size()}, {"members", std::move(members)}};
}

inline set_family family_from_json(const json& j) {
    const int n = detail::require_int(detail::require_field(j, "n", "family"), "family n");
    const json& members = detail::require_field(j, "members", "family");
    if (!members.is_array()) throw invalid_input("family: \"members\" must be an array");
    std::vector<std::vector<int>> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(detail::require_int_array(m, "family member"));
    return set_family(n, std::move(out));
}

// ---- transversal: [<element>...], index-aligned with members ----

inline json transversal_to_json(const transversal& t) { return json(t.assignment()); }

inline transversal transversal_from_json(const json& j) {
    return transversal(detail::require_int_array(j, "transversal"));
}

// ---- shelling order: [<member index>...] ----

inline json shelling_order_to_json(const shelling_order& ord) { return json(ord.order()); }

inline shelling_order shelling_order_from_json(const json& j) {
    return shelling_order(detail::require_int_array(j, "shelling order"));
}

// ---- configuration: {"demands": [<int>...]} ----

inline json configuration_to_json(const configuration& f) {
    return json{{"demands", f.demands()}};
}

inline configuration configuration_from_json(const json& j) {
    return configuration(detail::require_int_array(
        detail::require_field(j, "demands", "configuration"), "configuration demands"));
}

// ---- word: {"m": <int>, "values": [<int>...]} ----

inline json word_to_json(const surjective_word& w) {
    return json{{"m", w.codomain_size()}, {"values", w.values()}};
}

inline surjective_word word_from_json(const json& j) {
    const int m = detail::require_int(detail::require_field(j, "m", "word"), "word m");
    return surjective_word(
        m, detail::require_int_array(detail::require_field(j, "values", "word"), "word values"));
}

// ---- shape: {"lambda": [<int>...], "mu": [<int>...]} (mu optional) ----

inline json shape_to_json(const skew_shape& shape) {
    json out{{"lambda", shape.lambda()}};
    if (!shape.is_normal()) out["mu"] = shape.mu();
    return out;
}

inline skew_shape shape_from_json(const json& j) {
    std::vector<int> lambda = detail::require_int_array(
        detail::require_field(j, "lambda", "shape"), "shape lambda");
    std::vector<int> mu;
    if (j.is_object() && j.contains("mu"))
        mu = detail::require_int_array(j.at("mu"), "shape mu");
    return skew_shape(std::move(lambda), std::move(mu));
}

// ---- cells: [[row, col], ...] ----

inline json cells_to_json(const std::vector<cell>& cells) {
    json out = json::array();
    for (const cell& c : cells) out.push_back(json::array({c.row, c.col}));
    return out;
}

// ---- tableau: array of rows; row i holds lambda_i slots, the first mu_i
// ---- of them null.  Shape and entries are both recovered from the rows.

inline json tableau_to_json(const tableau& t) {
    json rows = json::array();
    const auto& shape = t.shape();
    for (int i = 1; i <= shape.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= shape.lambda_at(i); ++j) {
            if (j <= shape.mu_at(i))
                row.push_back(nullptr);
            else
                row.push_back(t.entry_at({i, j}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline tableau tableau_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw invalid_input("tableau: expected a non-empty array of rows");
    std::vector<int> lambda, mu;
    std::vector<int> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw invalid_input("tableau: each row must be a non-empty array");
        lambda.push_back(static_cast<int>(row.size()));
        int nulls = 0;
        bool past_nulls = false;
        for (const auto& v : row) {
            if (v.is_null()) {
                if (past_nulls)
                    throw invalid_input("tableau: null entries must form a row prefix");
                ++nulls;
            } else {
                past_nulls = true;
                entries.push_back(detail::require_int(v, "tableau entry"));
            }
        }
        mu.push_back(nulls);
    }
    return tableau(skew_shape(std::move(lambda), std::move(mu)), std::move(entries));
}

// ---- numbers ----

/** Big integers are reported as decimal strings to avoid any size limit. */
inline json bigint_to_json(const bigint& v) { return json(v.str()); }

/** Rationals as {"num": "<decimal>", "den": "<decimal>"}, canonical form. */
inline json rational_to_json(const exact_rational& r) {
    return json{{"num", rational_num(r).str()}, {"den", rational_den(r).str()}};
}

} // namespace halltab
