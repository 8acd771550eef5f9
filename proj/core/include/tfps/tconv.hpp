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

/// The t-deformed convolution
///   (A [+]^t B)_k = sum_{i+j=k} (t)_k / ((t)_i (t)_j) a_i b_j,
/// with falling factorials (t)_k. In finite mode the weights are evaluated
/// at t = d, inputs must be supported on degrees <= d, and coefficients
/// beyond d are zero.
TruncatedSeries tconv(const TruncatedSeries& a, const TruncatedSeries& b, const TParam& t);

/// Additive convolution of two monic polynomials of formal degree d.
/// Polynomials are coefficient vectors a_0..a_d for sum_i a_i x^{d-i},
/// a_0 = 1. Mirrors tconv through the coefficient-reversal embedding.
std::vector<Rational> finite_free_conv(const std::vector<Rational>& f,
                                       const std::vector<Rational>& g, int d);

/// Coefficientwise division by (t)_k: the isomorphism carrying [+]^t to the
/// ordinary Cauchy product. Finite mode requires support <= d.
TruncatedSeries phi_t(const TruncatedSeries& a, const TParam& t);

/// Inverse of phi_t: coefficientwise multiplication by (t)_k. In finite
/// mode coefficients beyond degree d are annihilated by (d)_k = 0.
TruncatedSeries phi_t_inv(const TruncatedSeries& a, const TParam& t);

/// E^t[A]: coefficient k becomes t^k a_k / (t)_k; requires a_0 = 1.
/// Equals dilate(phi_t(A, t), t).
TruncatedSeries e_transform(const TruncatedSeries& a, const TParam& t);

/// Truncated weighted-coefficient norm sum_{k<=N} |a_k/(t)_k| r^k. The
/// true norm is a series over all k, so the value is a lower bound.
struct TNorm {
    Rational value;
    int order = 0;
    bool lower_bound = true;
};

TNorm norm_t_r(const TruncatedSeries& a, const Rational& r, const TParam& t);

}  // namespace tfps
