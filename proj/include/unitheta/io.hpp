/* Copyright (c) 2026 The unitheta authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef UNITHETA_IO_HPP
#define UNITHETA_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "unitheta/polynomial.hpp"
#include "unitheta/qseries.hpp"
#include "unitheta/rational.hpp"
#include "unitheta/roots.hpp"

namespace unitheta {

using json = nlohmann::json;

// Rationals cross the JSON boundary as exact strings, never as floats.
inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    throw std::invalid_argument("io: expected rational string, got " + j.dump());
}

// Polynomials serialize as coefficient strings in ascending degree.
inline json to_json(const Poly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).to_string());
    return arr;
}

inline Poly poly_from_json(const json& j, Var v) {
    if (!j.is_array()) throw std::invalid_argument("io: expected coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Poly::from_coeffs(std::move(coeffs), v);
}

inline json to_json(const QSeries<Rational>& s) {
    json out;
    out["grid"] = "u";
    out["order"] = s.order();
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, c.to_string()}));
    out["terms"] = terms;
    if (s.support_in_multiples_of(4)) {
        json qterms = json::array();
        for (const auto& [e, c] : s.terms())
            qterms.push_back(json::array({e / 4, c.to_string()}));
        out["q_terms"] = qterms;
    }
    return out;
}

inline json to_json(const QSeries<Poly>& s) {
    json out;
    out["grid"] = "u";
    out["order"] = s.order();
    out["coefficient_ring"] = RingTraits<Poly>::tag;
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, to_json(c)}));
    out["terms"] = terms;
    return out;
}

inline QSeries<Rational> series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
        throw std::invalid_argument("io: expected series object");
    QSeries<Rational> s(j["order"].get<int>());
    for (const auto& t : j["terms"])
        s.set(t.at(0).get<int>(), rational_from_json(t.at(1)));
    return s;
}

inline json to_json(const IsolatingInterval& iv) {
    return json{{"lo", iv.lo.to_string()},
                {"hi", iv.hi.to_string()},
                {"multiplicity", iv.multiplicity}};
}

}  // namespace unitheta

#endif  // UNITHETA_IO_HPP
