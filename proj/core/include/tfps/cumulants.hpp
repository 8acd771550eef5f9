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

#include <vector>

#include "tfps/rational.hpp"
#include "tfps/series.hpp"
#include "tfps/tparam.hpp"

namespace tfps {

/// Cumulants kappa_1..kappa_N of a series under the t-deformed cumulant
/// transform; kappas[i-1] holds kappa_i.
struct CumulantVector {
    std::vector<Rational> kappas;
    TParam t;

    int size() const { return static_cast<int>(kappas.size()); }
    const Rational& kappa(int i) const { return kappas.at(static_cast<std::size_t>(i) - 1); }
};

/// Extracts kappa_1..kappa_N from a principal unit via
/// t C^t[A] = -z (log E^t[A])', i.e. one z_dlog of the E-transform.
CumulantVector c_transform(const TruncatedSeries& a, const TParam& t);

/// The unique principal unit with the given cumulants:
/// E^t[A] = exp(-t sum_i kappa_i z^i / i), then the E-scaling is inverted.
/// Missing high cumulants are treated as zero.
TruncatedSeries from_cumulants(const CumulantVector& kappas, int order);

/// Power sums p_1..p_N of a principal unit (coefficients of -z (log A)').
std::vector<Rational> power_sums(const TruncatedSeries& a);

/// Coefficients c_1..c_N of log of the exponential moment generating
/// function built from an ordinary moment series (m_0 = 1). Satisfies
/// n c_n = kappa_n at t = -1 exactly.
std::vector<Rational> classical_cumulants(const TruncatedSeries& moments);

}  // namespace tfps
