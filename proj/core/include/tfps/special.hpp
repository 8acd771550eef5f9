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

/// (1 - lambda z)^t: coefficient k is (-1)^k (t)_k lambda^k / k!.
/// In finite mode this is the image of (x - lambda)^d under iota_d.
TruncatedSeries binomial_series(const Rational& lambda, const TParam& t, int order);

/// The even series with coefficient (-1)^k (t)_{2k} / (t^k (2k)!!) at z^{2k}.
TruncatedSeries hermite_series(const TParam& t, int order);

/// Time-s member of the Hermite flow: the z^{2k} coefficient picks up s^k.
/// s = 0 gives the unit series; s = 1 gives hermite_series. Parametrizing by
/// s directly keeps all coefficients rational (no square-root dilation).
TruncatedSeries hermite_semigroup(const Rational& s, const TParam& t, int order);

/// Coefficient k is (-1)^k (lambda t)_k (t)_k / (t^k k!); lambda > 0.
/// At t = -1 the coefficients are the rising factorials (lambda)^(k).
TruncatedSeries laguerre_series(const Rational& lambda, const TParam& t, int order);

/// Parameters of the deformed hypergeometric series: coefficient k is
///   (-1)^k (t)_k / k! * prod_s (t b_s)_k / prod_r (t a_r)_k
/// (falling factorials). Every lower parameter a must satisfy
/// t a outside Z>=0 so the denominators never vanish.
struct HypergeometricSpec {
    std::vector<Rational> upper;  // the b-parameters
    std::vector<Rational> lower;  // the a-parameters
    TParam t;

    void validate() const;
};

TruncatedSeries hypergeometric_series(const HypergeometricSpec& spec, int order);

/// Checks the convolution closure instance
///   H[spec1](s1 z) [+]^t H[spec2](s2 z) == H[spec3](s3 z)
/// with signs s_l = (-1)^{#lower_l + #upper_l + 1}, the form equivalent to a
/// product identity of the underlying generalized hypergeometric functions.
/// All three specs must share t.
bool compare_closure(const HypergeometricSpec& spec1, const HypergeometricSpec& spec2,
                     const HypergeometricSpec& spec3, int order);

/// Coefficient reversal z^d f(1/z) of a monic polynomial given as a_0..a_d
/// (descending powers, a_0 = 1). The overload with an explicit order embeds
/// at a higher truncation order, zero-filled.
TruncatedSeries iota_d(const std::vector<Rational>& poly);
TruncatedSeries iota_d(const std::vector<Rational>& poly, int order);

/// Inverse reversal; requires support <= d. Returns coefficients c_0..c_d of
/// sum_i c_i x^{d-i} (not necessarily monic).
std::vector<Rational> iota_d_inv(const TruncatedSeries& a, int d);

}  // namespace tfps
