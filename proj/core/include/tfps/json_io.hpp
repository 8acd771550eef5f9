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

#pragma once

#include <string>
#include <vector>

#include "tfps/classical.hpp"
#include "tfps/cumulants.hpp"
#include "tfps/generators.hpp"
#include "tfps/limits.hpp"
#include "tfps/special.hpp"
#include "tfps/tconv.hpp"

// JSON wire formats. Rationals always travel as exact strings "p/q" or "p";
// serialization is canonical, so a parse/serialize round trip is
// byte-identical. Schemas:
//   series:     {"order": N, "coeffs": ["p/q", ...]}
//   tparam:     {"mode":"generic","t":"p/q"} | {"mode":"finite","d":n}
//   cumulants:  {"t": tparam, "kappas": ["p/q", ...]}
//   norm:       {"value":"p/q","order":N,"lower_bound":true}
//   law:        {"atoms":[["x","w"],...]}
//   mixture:    {"beta":[["b","a"],...],"gamma":["b",...]}
//   levy:       {"gamma":"p/q","a":"p/q","nu":[["x","w"],...]}
//   hg spec:    {"upper":["p/q",...],"lower":["p/q",...],"t": tparam}
//   polynomial: {"degree":d,"coeffs":["1", ...]}  (descending powers)
// Malformed payloads raise ParseError.

namespace tfps {

std::string to_json(const TruncatedSeries& a);
TruncatedSeries series_from_json(const std::string& text);

std::string to_json(const TParam& t);
TParam tparam_from_json(const std::string& text);

std::string to_json(const CumulantVector& kappas);
CumulantVector cumulants_from_json(const std::string& text);

std::string to_json(const TNorm& norm);

std::string to_json(const DiscreteLaw& law);
DiscreteLaw law_from_json(const std::string& text);

std::string to_json(const MixtureSpec& spec);
MixtureSpec mixture_from_json(const std::string& text);

std::string to_json(const LevyTriplet& triplet);
LevyTriplet levy_from_json(const std::string& text);

std::string to_json(const HypergeometricSpec& spec);
HypergeometricSpec hgspec_from_json(const std::string& text);

std::string poly_to_json(const std::vector<Rational>& poly);
std::vector<Rational> poly_from_json(const std::string& text);

/// CSV rendering of a series: header "k,coeff,decimal", one row per
/// coefficient with the exact rational and a 12-digit decimal.
std::string series_to_csv(const TruncatedSeries& a);

/// CSV rendering of a rational vector indexed from first_index.
std::string vector_to_csv(const std::vector<Rational>& values, int first_index);

}  // namespace tfps
