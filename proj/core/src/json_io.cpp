// Copyright 2026 The tfps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tfps/json_io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tfps/errors.hpp"

namespace tfps {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Rational rational_field(const json& j) {
    if (!j.is_string()) throw ParseError("rationals must be JSON strings like \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

std::vector<Rational> rational_array(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(rational_field(item));
    return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const Rational& v : values) arr.push_back(v.str());
    return arr;
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    const std::int64_t v = f.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(std::string("field '") + name + "' is out of range");
    return static_cast<int>(v);
}

json tparam_to_json(const TParam& t) {
    if (t.is_finite()) return json{{"mode", "finite"}, {"d", t.d()}};
    return json{{"mode", "generic"}, {"t", t.t().str()}};
}

TParam tparam_from(const json& j) {
    if (!j.is_object()) throw ParseError("deformation parameter must be an object");
    const json& mode = field(j, "mode");
    if (mode == "generic") return TParam::generic(rational_field(field(j, "t")));
    if (mode == "finite") return TParam::finite(int_field(j, "d"));
    throw ParseError("mode must be 'generic' or 'finite'");
}

std::vector<std::pair<Rational, Rational>> pair_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw ParseError(std::string(what) + " entries must be [\"p/q\",\"p/q\"] pairs");
        out.emplace_back(rational_field(item[0]), rational_field(item[1]));
    }
    return out;
}

}  // namespace

std::string to_json(const TruncatedSeries& a) {
    json j{{"order", a.order()}, {"coeffs", rationals_to_json(a.coeffs())}};
    return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("series must be an object");
    const int order = int_field(j, "order");
    std::vector<Rational> coeffs = rational_array(field(j, "coeffs"));
    if (static_cast<int>(coeffs.size()) > order + 1)
        throw ParseError("more coefficients than order+1");
    return TruncatedSeries(std::move(coeffs), order);
}

std::string to_json(const TParam& t) {
    return tparam_to_json(t).dump();
}

TParam tparam_from_json(const std::string& text) {
    return tparam_from(parse_json(text));
}

std::string to_json(const CumulantVector& kappas) {
    json j{{"t", tparam_to_json(kappas.t)}, {"kappas", rationals_to_json(kappas.kappas)}};
    return j.dump();
}

CumulantVector cumulants_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("cumulant vector must be an object");
    return CumulantVector{rational_array(field(j, "kappas")), tparam_from(field(j, "t"))};
}

std::string to_json(const TNorm& norm) {
    json j{{"value", norm.value.str()}, {"order", norm.order}, {"lower_bound", norm.lower_bound}};
    return j.dump();
}

std::string to_json(const DiscreteLaw& law) {
    json atoms = json::array();
    for (const auto& atom : law.atoms)
        atoms.push_back(json::array({atom.position.str(), atom.weight.str()}));
    return json{{"atoms", atoms}}.dump();
}

DiscreteLaw law_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("law must be an object");
    DiscreteLaw law;
    for (auto& [x, w] : pair_array(field(j, "atoms"), "atoms"))
        law.atoms.push_back(DiscreteLaw::Atom{std::move(x), std::move(w)});
    law.validate();
    return law;
}

std::string to_json(const MixtureSpec& spec) {
    json beta = json::array();
    for (const auto& p : spec.beta_pairs) beta.push_back(json::array({p.b.str(), p.a.str()}));
    return json{{"beta", beta}, {"gamma", rationals_to_json(spec.gamma_params)}}.dump();
}

MixtureSpec mixture_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("mixture spec must be an object");
    MixtureSpec spec;
    for (auto& [b, a] : pair_array(field(j, "beta"), "beta"))
        spec.beta_pairs.push_back(MixtureSpec::BetaPair{std::move(b), std::move(a)});
    spec.gamma_params = rational_array(field(j, "gamma"));
    spec.validate();
    return spec;
}

std::string to_json(const LevyTriplet& triplet) {
    json nu = json::array();
    for (const auto& atom : triplet.nu) nu.push_back(json::array({atom.x.str(), atom.w.str()}));
    return json{{"gamma", triplet.gamma.str()}, {"a", triplet.a.str()}, {"nu", nu}}.dump();
}

LevyTriplet levy_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("triplet must be an object");
    LevyTriplet triplet;
    triplet.gamma = rational_field(field(j, "gamma"));
    triplet.a = rational_field(field(j, "a"));
    for (auto& [x, w] : pair_array(field(j, "nu"), "nu"))
        triplet.nu.push_back(LevyTriplet::Atom{std::move(x), std::move(w)});
    triplet.validate();
    return triplet;
}

std::string to_json(const HypergeometricSpec& spec) {
    json j{{"upper", rationals_to_json(spec.upper)},
           {"lower", rationals_to_json(spec.lower)},
           {"t", tparam_to_json(spec.t)}};
    return j.dump();
}

HypergeometricSpec hgspec_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("hypergeometric spec must be an object");
    HypergeometricSpec spec{rational_array(field(j, "upper")), rational_array(field(j, "lower")),
                            tparam_from(field(j, "t"))};
    spec.validate();
    return spec;
}

std::string poly_to_json(const std::vector<Rational>& poly) {
    json j{{"degree", static_cast<int>(poly.size()) - 1}, {"coeffs", rationals_to_json(poly)}};
    return j.dump();
}

std::vector<Rational> poly_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("polynomial must be an object");
    const int degree = int_field(j, "degree");
    std::vector<Rational> coeffs = rational_array(field(j, "coeffs"));
    if (static_cast<int>(coeffs.size()) != degree + 1)
        throw ParseError("polynomial needs exactly degree+1 coefficients");
    return coeffs;
}

std::string series_to_csv(const TruncatedSeries& a) {
    std::ostringstream out;
    out << "k,coeff,decimal\n";
    for (int k = 0; k <= a.order(); ++k)
        out << k << "," << a[k].str() << "," << a[k].decimal(12) << "\n";
    return out.str();
}

std::string vector_to_csv(const std::vector<Rational>& values, int first_index) {
    std::ostringstream out;
    out << "n,value,decimal\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (first_index + static_cast<int>(i)) << "," << values[i].str() << ","
            << values[i].decimal(12) << "\n";
    return out.str();
}

}  // namespace tfps
