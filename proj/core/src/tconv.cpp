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

#include "tfps/tconv.hpp"

#include <string>

#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"

namespace tfps {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

TruncatedSeries tconv(const TruncatedSeries& a, const TruncatedSeries& b, const TParam& t) {
    if (a.order() != b.order())
        throw TruncationMismatch("tconv operands have orders " + std::to_string(a.order()) +
                                 " and " + std::to_string(b.order()));
    t.require_support(a);
    t.require_support(b);

    const int n = a.order();
    const int kmax = t.is_finite() ? std::min(n, t.d()) : n;
    const std::vector<Rational> poch = falling_factorial_table(t.t(), kmax);

    std::vector<Rational> c(idx(n) + 1, Rational(0));
    for (int k = 0; k <= kmax; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            if (a[i].is_zero() || b[j].is_zero()) continue;
            acc += a[i] * b[j] / (poch[idx(i)] * poch[idx(j)]);
        }
        c[idx(k)] = acc * poch[idx(k)];
    }
    return TruncatedSeries(std::move(c), n);
}

std::vector<Rational> finite_free_conv(const std::vector<Rational>& f,
                                       const std::vector<Rational>& g, int d) {
    if (d < 1) throw ParameterError("finite_free_conv requires d >= 1");
    const std::size_t want = idx(d) + 1;
    if (f.size() != want || g.size() != want)
        throw DomainError("polynomial coefficient vectors must have length d+1");
    if (!f[0].is_one() || !g[0].is_one())
        throw DomainError("finite_free_conv requires monic inputs");

    const std::vector<Rational> poch = falling_factorial_table(Rational(d), d);
    std::vector<Rational> c(want, Rational(0));
    for (int k = 0; k <= d; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            if (f[idx(i)].is_zero() || g[idx(j)].is_zero()) continue;
            acc += f[idx(i)] * g[idx(j)] / (poch[idx(i)] * poch[idx(j)]);
        }
        c[idx(k)] = acc * poch[idx(k)];
    }
    return c;
}

TruncatedSeries phi_t(const TruncatedSeries& a, const TParam& t) {
    t.require_support(a);
    const int kmax = t.is_finite() ? std::min(a.order(), t.d()) : a.order();
    const std::vector<Rational> poch = falling_factorial_table(t.t(), kmax);
    std::vector<Rational> c(idx(a.order()) + 1, Rational(0));
    for (int k = 0; k <= kmax; ++k) c[idx(k)] = a[k] / poch[idx(k)];
    return TruncatedSeries(std::move(c), a.order());
}

TruncatedSeries phi_t_inv(const TruncatedSeries& a, const TParam& t) {
    const int n = a.order();
    const int kmax = t.is_finite() ? std::min(n, t.d()) : n;
    const std::vector<Rational> poch = falling_factorial_table(t.t(), kmax);
    std::vector<Rational> c(idx(n) + 1, Rational(0));
    for (int k = 0; k <= kmax; ++k) c[idx(k)] = a[k] * poch[idx(k)];
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries e_transform(const TruncatedSeries& a, const TParam& t) {
    if (!a[0].is_one()) throw DomainError("e_transform requires constant term 1");
    return dilate(phi_t(a, t), t.t());
}

TNorm norm_t_r(const TruncatedSeries& a, const Rational& r, const TParam& t) {
    if (t.is_finite())
        throw ParameterError("norm_t_r is defined in generic mode only");
    if (r.sign() < 0) throw DomainError("norm radius must be >= 0");
    const std::vector<Rational> poch = falling_factorial_table(t.t(), a.order());
    Rational sum(0);
    Rational rk(1);
    for (int k = 0; k <= a.order(); ++k) {
        sum += (a[k] / poch[idx(k)]).abs() * rk;
        rk *= r;
    }
    return TNorm{sum, a.order(), true};
}

}  // namespace tfps
