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

#include "tfps/cumulants.hpp"

#include <string>

#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"
#include "tfps/tconv.hpp"

namespace tfps {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

CumulantVector c_transform(const TruncatedSeries& a, const TParam& t) {
    if (!a[0].is_one()) throw DomainError("c_transform requires constant term 1");
    const TruncatedSeries m = z_dlog(e_transform(a, t));
    std::vector<Rational> kappas(idx(a.order()));
    for (int i = 1; i <= a.order(); ++i) kappas[idx(i) - 1] = m[i] / t.t();
    return CumulantVector{std::move(kappas), t};
}

TruncatedSeries from_cumulants(const CumulantVector& kappas, int order) {
    if (kappas.size() > order)
        throw TruncationMismatch("cumulant vector of length " + std::to_string(kappas.size()) +
                                 " exceeds target order " + std::to_string(order));
    const TParam& t = kappas.t;
    // log E^t[A] = -t sum_i kappa_i z^i / i
    std::vector<Rational> logc(idx(order) + 1, Rational(0));
    for (int i = 1; i <= kappas.size(); ++i)
        logc[idx(i)] = -t.t() * kappas.kappa(i) / Rational(i);
    const TruncatedSeries et = formal_exp(TruncatedSeries(std::move(logc), order));
    // Undo the E-scaling: a_k = (t)_k / t^k * (E^t[A])_k. In finite mode the
    // factor (d)_k vanishes beyond degree d, so the result lands inside the
    // degree-<=d range automatically.
    const int kmax = t.is_finite() ? std::min(order, t.d()) : order;
    const std::vector<Rational> poch = falling_factorial_table(t.t(), kmax);
    std::vector<Rational> c(idx(order) + 1, Rational(0));
    Rational tk(1);
    for (int k = 0; k <= kmax; ++k) {
        c[idx(k)] = et[k] * poch[idx(k)] / tk;
        tk *= t.t();
    }
    return TruncatedSeries(std::move(c), order);
}

std::vector<Rational> power_sums(const TruncatedSeries& a) {
    const TruncatedSeries m = z_dlog(a);  // checks a_0 = 1
    std::vector<Rational> p(idx(a.order()));
    for (int k = 1; k <= a.order(); ++k) p[idx(k) - 1] = m[k];
    return p;
}

std::vector<Rational> classical_cumulants(const TruncatedSeries& moments) {
    if (!moments[0].is_one()) throw DomainError("moment series must have m_0 = 1");
    const TParam minus_one = TParam::generic(Rational(-1));
    const TruncatedSeries logpsi = formal_log(e_transform(moments, minus_one));
    std::vector<Rational> c(idx(moments.order()));
    for (int n = 1; n <= moments.order(); ++n) c[idx(n) - 1] = logpsi[n];
    return c;
}

}  // namespace tfps
