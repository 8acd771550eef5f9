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

#include "tfps/special.hpp"

#include <string>

#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"
#include "tfps/tconv.hpp"

namespace tfps {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

TruncatedSeries binomial_series(const Rational& lambda, const TParam& t, int order) {
    const std::vector<Rational> poch = falling_factorial_table(t.t(), order);
    std::vector<Rational> c(idx(order) + 1, Rational(0));
    c[0] = Rational(1);
    Rational lk(1);
    Rational kfac(1);
    Rational sign(1);
    for (int k = 1; k <= order; ++k) {
        lk *= lambda;
        kfac *= Rational(k);
        sign = -sign;
        c[idx(k)] = sign * poch[idx(k)] * lk / kfac;
    }
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries hermite_series(const TParam& t, int order) {
    return hermite_semigroup(Rational(1), t, order);
}

TruncatedSeries hermite_semigroup(const Rational& s, const TParam& t, int order) {
    if (s.sign() < 0) throw DomainError("hermite flow requires s >= 0");
    const std::vector<Rational> poch = falling_factorial_table(t.t(), order);
    std::vector<Rational> c(idx(order) + 1, Rational(0));
    c[0] = Rational(1);
    Rational sk(1);
    Rational tk(1);
    Rational dfac(1);  // (2k)!! = 2^k k!
    Rational sign(1);
    for (int k = 1; 2 * k <= order; ++k) {
        sk *= s;
        tk *= t.t();
        dfac *= Rational(2 * k);
        sign = -sign;
        c[idx(2 * k)] = sign * poch[idx(2 * k)] * sk / (tk * dfac);
    }
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries laguerre_series(const Rational& lambda, const TParam& t, int order) {
    if (lambda.sign() <= 0) throw DomainError("laguerre series requires lambda > 0");
    const std::vector<Rational> poch_t = falling_factorial_table(t.t(), order);
    const std::vector<Rational> poch_lt = falling_factorial_table(lambda * t.t(), order);
    std::vector<Rational> c(idx(order) + 1, Rational(0));
    c[0] = Rational(1);
    Rational tk(1);
    Rational kfac(1);
    Rational sign(1);
    for (int k = 1; k <= order; ++k) {
        tk *= t.t();
        kfac *= Rational(k);
        sign = -sign;
        c[idx(k)] = sign * poch_lt[idx(k)] * poch_t[idx(k)] / (tk * kfac);
    }
    return TruncatedSeries(std::move(c), order);
}

void HypergeometricSpec::validate() const {
    for (const Rational& a : lower) {
        if ((t.t() * a).is_nonnegative_integer())
            throw ParameterError("lower parameter a = " + a.str() +
                                 " has t*a in Z>=0; falling factorial vanishes");
    }
}

TruncatedSeries hypergeometric_series(const HypergeometricSpec& spec, int order) {
    spec.validate();
    const Rational& t = spec.t.t();
    const std::vector<Rational> poch_t = falling_factorial_table(t, order);
    std::vector<std::vector<Rational>> poch_upper, poch_lower;
    poch_upper.reserve(spec.upper.size());
    poch_lower.reserve(spec.lower.size());
    for (const Rational& b : spec.upper) poch_upper.push_back(falling_factorial_table(t * b, order));
    for (const Rational& a : spec.lower) poch_lower.push_back(falling_factorial_table(t * a, order));

    std::vector<Rational> c(idx(order) + 1, Rational(0));
    c[0] = Rational(1);
    Rational kfac(1);
    Rational sign(1);
    for (int k = 1; k <= order; ++k) {
        kfac *= Rational(k);
        sign = -sign;
        Rational term = sign * poch_t[idx(k)] / kfac;
        for (const auto& pu : poch_upper) term *= pu[idx(k)];
        for (const auto& pl : poch_lower) term /= pl[idx(k)];
        c[idx(k)] = term;
    }
    return TruncatedSeries(std::move(c), order);
}

bool compare_closure(const HypergeometricSpec& spec1, const HypergeometricSpec& spec2,
                     const HypergeometricSpec& spec3, int order) {
    if (!(spec1.t == spec2.t) || !(spec1.t == spec3.t))
        throw ParameterError("closure check requires a common t across the three specs");
    const auto sign_of = [](const HypergeometricSpec& s) {
        const std::size_t parity = (s.lower.size() + s.upper.size() + 1) % 2;
        return parity == 0 ? Rational(1) : Rational(-1);
    };
    const TruncatedSeries lhs1 = dilate(hypergeometric_series(spec1, order), sign_of(spec1));
    const TruncatedSeries lhs2 = dilate(hypergeometric_series(spec2, order), sign_of(spec2));
    const TruncatedSeries rhs = dilate(hypergeometric_series(spec3, order), sign_of(spec3));
    return tconv(lhs1, lhs2, spec1.t) == rhs;
}

TruncatedSeries iota_d(const std::vector<Rational>& poly) {
    return iota_d(poly, static_cast<int>(poly.size()) - 1);
}

TruncatedSeries iota_d(const std::vector<Rational>& poly, int order) {
    if (poly.empty()) throw DomainError("empty polynomial");
    if (!poly[0].is_one()) throw DomainError("iota_d requires a monic polynomial");
    const int d = static_cast<int>(poly.size()) - 1;
    if (order < d)
        throw TruncationMismatch("order " + std::to_string(order) +
                                 " cannot hold a degree-" + std::to_string(d) + " image");
    std::vector<Rational> c(poly);
    return TruncatedSeries(std::move(c), order);
}

std::vector<Rational> iota_d_inv(const TruncatedSeries& a, int d) {
    if (d < 0) throw DomainError("negative degree");
    if (a.support_degree() > d)
        throw DomainError("support degree " + std::to_string(a.support_degree()) +
                          " exceeds d = " + std::to_string(d));
    std::vector<Rational> poly(idx(d) + 1, Rational(0));
    for (int k = 0; k <= std::min(d, a.order()); ++k) poly[idx(k)] = a[k];
    return poly;
}

}  // namespace tfps
