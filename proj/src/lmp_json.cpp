/*
   Copyright 2026 The whf contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "whf/lmp_json.hpp"

#include "whf/errors.hpp"

namespace whf {

Json toJson(const Rational& x) { return toString(x); }

Json toJson(const GaussianRational& z) { return Json{{"re", toString(z.re())}, {"im", toString(z.im())}}; }

Json toJson(const LaurentScalar& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(toJson(c));
    return Json{{"pmin", s.pmin()}, {"coeffs", coeffs}};
}

Json toJson(const LaurentMatrix2& m) {
    Json rows = Json::array();
    for (int i = 0; i < 2; ++i) rows.push_back(Json::array({toJson(m(i, 0)), toJson(m(i, 1))}));
    return Json{{"rows", 2}, {"cols", 2}, {"entries", rows}};
}

Rational rationalFromJson(const Json& j) {
    if (j.is_string()) return parseRational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

GaussianRational gaussianFromJson(const Json& j) {
    if (!j.is_object()) return GaussianRational(rationalFromJson(j));
    Rational re = j.contains("re") ? rationalFromJson(j.at("re")) : Rational(0);
    Rational im = j.contains("im") ? rationalFromJson(j.at("im")) : Rational(0);
    return {re, im};
}

LaurentScalar scalarFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs")) throw ParseError("Laurent entry needs \"pmin\" and \"coeffs\"");
    int pmin = j.value("pmin", 0);
    std::vector<GaussianRational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(gaussianFromJson(x));
    return LaurentScalar(pmin, std::move(c));
}

LaurentMatrix2 matrixFromJson(const Json& j) {
    try {
        if (j.value("rows", 0) != 2 || j.value("cols", 0) != 2) throw ParseError("only 2x2 matrices are supported");
        const Json& e = j.at("entries");
        if (e.size() != 2 || e[0].size() != 2 || e[1].size() != 2) throw ParseError("entries must be 2x2");
        return {scalarFromJson(e[0][0]), scalarFromJson(e[0][1]), scalarFromJson(e[1][0]), scalarFromJson(e[1][1])};
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed LMP-JSON: ") + ex.what());
    }
}

Json toJson(const ScalarFactorisationData& s) {
    return Json{{"a11Minus", toJson(s.a11Minus)},     {"a11Plus", toJson(s.a11Plus)},
                {"kappa", s.kappa},                   {"deltaMinus", toJson(s.deltaMinus)},
                {"deltaPlus", toJson(s.deltaPlus)},   {"theta", s.theta}};
}

ScalarFactorisationData scalarDataFromJson(const Json& j) {
    if (!j.is_object()) throw ParseError("scalar factorisation data must be an object");
    try {
        ScalarFactorisationData s;
        auto entry = [&](const char* key, LaurentScalar& dst) {
            if (j.contains(key)) dst = scalarFromJson(j.at(key));
        };
        entry("a11Minus", s.a11Minus);
        entry("a11Plus", s.a11Plus);
        entry("deltaMinus", s.deltaMinus);
        entry("deltaPlus", s.deltaPlus);
        s.kappa = j.value("kappa", 0);
        s.theta = j.value("theta", 0);
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed scalar data: ") + ex.what());
    }
}

}  // namespace whf
