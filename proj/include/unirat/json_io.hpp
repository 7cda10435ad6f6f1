#pragma once

#include <functional>
#include <json.hpp>

#include "unirat/funcfield.hpp"
#include "unirat/ratfunc.hpp"

namespace unirat {

using Json = nlohmann::ordered_json;

// Poly wire format: {"vars":[...],"terms":[{"exps":[...],"coef":"<scalar>"}]}
// with terms in canonical (descending graded-lex) order. Round-trips must be
// bit-exact, so the reader validates ordering and rejects zero coefficients.
template <CoeffField K>
Json poly_to_json(const Poly<K>& f) {
    Json j;
    j["vars"] = f.vars()->names();
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        Json jt;
        jt["exps"] = t.m.e;
        jt["coef"] = t.c.to_string();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

template <CoeffField K>
Poly<K> poly_from_json(const Json& j, const std::function<K(std::string_view)>& parse_coef) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw parse_error("polynomial JSON must have 'vars' and 'terms'");
    VarSetPtr vars = VarSet::make(j.at("vars").get<std::vector<std::string>>());
    std::vector<typename Poly<K>::Term> terms;
    Mono prev;
    for (const auto& jt : j.at("terms")) {
        Mono m(jt.at("exps").get<std::vector<int>>());
        if (m.e.size() != vars->size()) throw parse_error("exponent vector arity mismatch");
        for (int e : m.e)
            if (e < 0) throw parse_error("negative exponent");
        K c = parse_coef(jt.at("coef").get<std::string>());
        if (c.is_zero()) throw parse_error("zero coefficient stored in polynomial JSON");
        if (!terms.empty() && grlex_cmp(prev, m) <= 0)
            throw parse_error("polynomial terms out of canonical order");
        prev = m;
        terms.push_back({std::move(m), std::move(c)});
    }
    return Poly<K>::from_terms(std::move(vars), std::move(terms));
}

template <CoeffField K>
Json ratfunc_to_json(const RatFunc<K>& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

template <CoeffField K>
RatFunc<K> ratfunc_from_json(const Json& j, const std::function<K(std::string_view)>& parse_coef) {
    return RatFunc<K>(poly_from_json<K>(j.at("num"), parse_coef),
                      poly_from_json<K>(j.at("den"), parse_coef));
}

inline Json fieldelem_to_json(const funcfield::FieldElem& f) {
    Json j;
    j["num"] = poly_to_json(f.num().poly());
    j["den"] = poly_to_json(f.den().poly());
    return j;
}

inline funcfield::FieldElem fieldelem_from_json(const Json& j) {
    auto parse = [](std::string_view s) { return GaussRat::from_string(s); };
    return funcfield::FieldElem(
        funcfield::CurveElem(poly_from_json<GaussRat>(j.at("num"), parse)),
        funcfield::CurveElem(poly_from_json<GaussRat>(j.at("den"), parse)));
}

}  // namespace unirat
