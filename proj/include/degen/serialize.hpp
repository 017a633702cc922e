#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "degen/checks.hpp"
#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"
#include "degen/special.hpp"

namespace degen {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.to_string(); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw argument_error("rational: expected a JSON string");
    return Rational::from_string(j.get<std::string>());
}

/// Ascending λ-degree array of rational strings; the zero polynomial is [].
inline Json to_json(const LPoly& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs())
        arr.push_back(c.to_string());
    return arr;
}

inline LPoly lpoly_from_json(const Json& j) {
    if (!j.is_array())
        throw argument_error("LPoly: expected a JSON array");
    std::vector<Rational> cs;
    cs.reserve(j.size());
    for (const Json& e : j)
        cs.push_back(rational_from_json(e));
    return LPoly(std::move(cs));
}

/// Ascending x-degree array of LPoly arrays.
inline Json to_json(const XPoly& p) {
    Json arr = Json::array();
    for (const LPoly& c : p.coeffs())
        arr.push_back(to_json(c));
    return arr;
}

inline XPoly xpoly_from_json(const Json& j) {
    if (!j.is_array())
        throw argument_error("XPoly: expected a JSON array");
    std::vector<LPoly> cs;
    cs.reserve(j.size());
    for (const Json& e : j)
        cs.push_back(lpoly_from_json(e));
    return XPoly(std::move(cs));
}

template <typename C>
Json to_json(const TSeries<C>& s) {
    Json coeffs = Json::array();
    for (const C& c : s.coeffs())
        coeffs.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline TSeries<LPoly> lseries_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw argument_error("TSeries: expected {\"order\", \"coeffs\"}");
    std::vector<LPoly> cs;
    for (const Json& e : j.at("coeffs"))
        cs.push_back(lpoly_from_json(e));
    return TSeries<LPoly>(j.at("order").get<int>(), std::move(cs));
}

inline TSeries<XPoly> xseries_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw argument_error("TSeries: expected {\"order\", \"coeffs\"}");
    std::vector<XPoly> cs;
    for (const Json& e : j.at("coeffs"))
        cs.push_back(xpoly_from_json(e));
    return TSeries<XPoly>(j.at("order").get<int>(), std::move(cs));
}

inline Json to_json(const RingElem& e) {
    if (std::holds_alternative<LPoly>(e))
        return to_json(std::get<LPoly>(e));
    return to_json(std::get<XPoly>(e));
}

inline std::string pretty(const RingElem& e) {
    if (std::holds_alternative<LPoly>(e))
        return pretty(std::get<LPoly>(e));
    return pretty(std::get<XPoly>(e));
}

inline Json to_json(const CheckReport& rep) {
    Json params = Json::object();
    for (const auto& [key, value] : rep.params)
        params[key] = value;
    params["lambda"] = rep.lambda_mode;
    Json j{{"id", rep.id}, {"params", params}, {"pass", rep.pass}};
    if (rep.first_mismatch) {
        j["first_mismatch"] = Json{{"power", rep.first_mismatch->power},
                                   {"expected", to_json(rep.first_mismatch->expected)},
                                   {"actual", to_json(rep.first_mismatch->actual)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (rep.error)
        j["error"] = *rep.error;
    return j;
}

/// Stirling triangle export: rows n = 0..n_max of LPoly serializations, or
/// of rational strings when λ is fixed.
inline Json stirling_table_json(int n_max, int r, const std::optional<Rational>& lambda = {}) {
    if (n_max < 0 || r < 0)
        throw argument_error("stirling_table_json: negative argument");
    StirlingTable table(n_max, r);
    Json rows = Json::array();
    for (int n = 0; n <= n_max; ++n) {
        Json row = Json::array();
        for (int k = 0; k <= n; ++k) {
            if (lambda)
                row.push_back(table.value(n, k)(*lambda).to_string());
            else
                row.push_back(to_json(table.value(n, k)));
        }
        rows.push_back(std::move(row));
    }
    Json j{{"kind", "stirling"}, {"n_max", n_max}, {"r", r}};
    if (lambda)
        j["lambda"] = lambda->to_string();
    j["rows"] = rows;
    return j;
}

/// RFC 4180 quoting for one CSV field.
inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

} // namespace degen
