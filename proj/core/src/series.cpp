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

#include "tfps/series.hpp"

#include <string>

#include "tfps/errors.hpp"

namespace tfps {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw TruncationMismatch("series orders differ: " + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order) : order_(order) {
    if (order < 0) throw DomainError("negative truncation order");
    const std::size_t want = idx(order) + 1;
    if (coeffs.size() > want)
        throw TruncationMismatch("got " + std::to_string(coeffs.size()) +
                                 " coefficients for order " + std::to_string(order));
    coeffs.resize(want, Rational(0));
    coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries({}, order);
}

TruncatedSeries TruncatedSeries::one(int order) {
    return TruncatedSeries({Rational(1)}, order);
}

int TruncatedSeries::support_degree() const {
    for (int k = order_; k >= 0; --k)
        if (!coeffs_[idx(k)].is_zero()) return k;
    return -1;
}

TruncatedSeries make_series(std::vector<Rational> coeffs, int order) {
    return TruncatedSeries(std::move(coeffs), order);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coeffs());
    for (int k = 0; k <= a.order(); ++k) c[idx(k)] += b[k];
    return TruncatedSeries(std::move(c), a.order());
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coeffs());
    for (int k = 0; k <= a.order(); ++k) c[idx(k)] -= b[k];
    return TruncatedSeries(std::move(c), a.order());
}

TruncatedSeries negate(const TruncatedSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) x = -x;
    return TruncatedSeries(std::move(c), a.order());
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out) x *= c;
    return TruncatedSeries(std::move(out), a.order());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    std::vector<Rational> c(idx(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            c[idx(i + j)] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c), n);
}

TruncatedSeries formal_log(const TruncatedSeries& a) {
    if (!a[0].is_one()) throw DomainError("formal_log requires constant term 1");
    const int n = a.order();
    // A L' = A'  =>  l_k = a_k - (1/k) sum_{j=1}^{k-1} j l_j a_{k-j}
    std::vector<Rational> l(idx(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) {
        Rational acc = a[k];
        Rational conv(0);
        for (int j = 1; j < k; ++j) conv += Rational(j) * l[idx(j)] * a[k - j];
        acc -= conv / Rational(k);
        l[idx(k)] = acc;
    }
    return TruncatedSeries(std::move(l), n);
}

TruncatedSeries formal_exp(const TruncatedSeries& a) {
    if (!a[0].is_zero()) throw DomainError("formal_exp requires constant term 0");
    const int n = a.order();
    // E' = A' E  =>  k e_k = sum_{j=1}^{k} j a_j e_{k-j}
    std::vector<Rational> e(idx(n) + 1, Rational(0));
    e[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += Rational(j) * a[j] * e[idx(k - j)];
        e[idx(k)] = acc / Rational(k);
    }
    return TruncatedSeries(std::move(e), n);
}

TruncatedSeries dilate(const TruncatedSeries& a, const Rational& r) {
    std::vector<Rational> c(a.coeffs());
    Rational rk(1);
    for (int k = 1; k <= a.order(); ++k) {
        rk *= r;
        c[idx(k)] *= rk;
    }
    return TruncatedSeries(std::move(c), a.order());
}

TruncatedSeries z_dlog(const TruncatedSeries& a) {
    const TruncatedSeries l = formal_log(a);  // checks a_0 = 1
    std::vector<Rational> m(idx(a.order()) + 1, Rational(0));
    for (int k = 1; k <= a.order(); ++k) m[idx(k)] = Rational(-k) * l[k];
    return TruncatedSeries(std::move(m), a.order());
}

TruncatedSeries truncate(const TruncatedSeries& a, int new_order) {
    if (new_order < 0 || new_order > a.order())
        throw TruncationMismatch("cannot truncate order " + std::to_string(a.order()) +
                                 " to " + std::to_string(new_order));
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + new_order + 1);
    return TruncatedSeries(std::move(c), new_order);
}

}  // namespace tfps
