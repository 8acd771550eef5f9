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

namespace tfps {

/// A formal power series truncated at order N: exactly N+1 exact rational
/// coefficients, index k holding the coefficient of z^k. Every identity in
/// this library is an identity mod z^{N+1}; operations require equal orders
/// rather than silently taking a minimum.
///
/// Values are immutable once constructed and safe to share across threads.
class TruncatedSeries {
public:
    /// Zero-fills missing high-order coefficients. Throws TruncationMismatch
    /// if more than order+1 coefficients are supplied.
    TruncatedSeries(std::vector<Rational> coeffs, int order);

    static TruncatedSeries zero(int order);
    static TruncatedSeries one(int order);

    int order() const { return order_; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Largest k with a nonzero coefficient, or -1 for the zero series.
    int support_degree() const;

    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
    int order_;
};

/// Spec-facing constructor name; identical to the TruncatedSeries ctor.
TruncatedSeries make_series(std::vector<Rational> coeffs, int order);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);

/// Cauchy product mod z^{N+1}; equal orders required.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return scale(a, c); }

/// Formal logarithm of a principal unit (a_0 = 1), via the coefficient
/// recurrence of A L' = A'. The result has zero constant term.
TruncatedSeries formal_log(const TruncatedSeries& a);

/// Formal exponential of a series with zero constant term, via E' = A' E.
TruncatedSeries formal_exp(const TruncatedSeries& a);

/// Dilation A(z) -> A(rz): coefficient k picks up a factor r^k.
TruncatedSeries dilate(const TruncatedSeries& a, const Rational& r);

/// -z (log A)', the power-sum generating series of a principal unit;
/// coefficient k is the k-th power sum p_k(A).
TruncatedSeries z_dlog(const TruncatedSeries& a);

/// Restriction to a lower order (new_order <= order).
TruncatedSeries truncate(const TruncatedSeries& a, int new_order);

}  // namespace tfps
