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

namespace tfps {

/// Finitely supported probability law with rational atoms; weights are
/// positive and sum to 1.
struct DiscreteLaw {
    struct Atom {
        Rational position;
        Rational weight;
    };
    std::vector<Atom> atoms;

    void validate() const;
};

/// Ordinary moment series m_k = sum_i w_i x_i^k.
TruncatedSeries moments_discrete(const DiscreteLaw& law, int order);

/// Moment series of the sum of independent random variables: the t = -1
/// convolution, whose weights are the binomial coefficients C(k, i).
/// Both inputs must have m_0 = 1.
TruncatedSeries classical_conv(const TruncatedSeries& mx, const TruncatedSeries& my);

/// Product mixture of Beta and Gamma factors. Each beta pair (b, a)
/// contributes a Beta(b, a-b) factor (requires a - b > 0); each gamma
/// parameter b contributes a Ga(b) factor. The number of gamma parameters
/// must be even, the condition under which the moment sequence matches the
/// deformed hypergeometric series at t = -1 without a stray sign.
struct MixtureSpec {
    struct BetaPair {
        Rational b;
        Rational a;
    };
    std::vector<BetaPair> beta_pairs;
    std::vector<Rational> gamma_params;

    void validate() const;
};

/// m_k = prod_s (b_s)^(k) / prod_r (a_r)^(k) with rising factorials
/// standing in for the gamma-function ratios.
TruncatedSeries mixture_moments(const MixtureSpec& spec, int order);

/// Cumulants of the driving process at time s from the cumulants of a
/// self-decomposable law: entrywise c_n -> s * n * c_n.
std::vector<Rational> bdlp_cumulants(const std::vector<Rational>& c, const Rational& s);

}  // namespace tfps
