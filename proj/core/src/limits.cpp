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

#include "tfps/limits.hpp"

#include <sstream>

#include "tfps/cumulants.hpp"
#include "tfps/errors.hpp"
#include "tfps/special.hpp"
#include "tfps/tconv.hpp"

namespace tfps {

namespace {

TruncatedSeries series_pow(TruncatedSeries base, long e) {
    TruncatedSeries acc = TruncatedSeries::one(base.order());
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

}  // namespace

TruncatedSeries conv_power(const TruncatedSeries& a, long m, const TParam& t) {
    if (m < 1) throw DomainError("convolution power requires m >= 1");
    if (!a[0].is_one()) throw DomainError("convolution power requires constant term 1");
    return phi_t_inv(series_pow(phi_t(a, t), m), t);
}

std::vector<ConvergenceRow> lln_table(const TruncatedSeries& a, const TParam& t,
                                      const std::vector<long>& ms) {
    const Rational lambda = c_transform(a, t).kappa(1);
    const TruncatedSeries limit = binomial_series(lambda, t, a.order());
    std::vector<ConvergenceRow> rows;
    rows.reserve(ms.size());
    for (long m : ms) {
        const TruncatedSeries rescaled = dilate(conv_power(a, m, t), Rational(1, m));
        std::vector<Rational> errors(static_cast<std::size_t>(a.order()) + 1);
        for (int k = 0; k <= a.order(); ++k)
            errors[static_cast<std::size_t>(k)] = (rescaled[k] - limit[k]).abs();
        rows.push_back(ConvergenceRow{m, std::move(errors), 0});
    }
    return rows;
}

std::vector<ConvergenceRow> clt_table(const TruncatedSeries& a, const TParam& t,
                                      const std::vector<long>& ms) {
    const CumulantVector kappa = c_transform(a, t);
    if (!kappa.kappa(1).is_zero() || !kappa.kappa(2).is_one())
        throw DomainError("clt table requires kappa_1 = 0 and kappa_2 = 1");
    const int nmax = t.is_finite() ? std::min(a.order(), t.d()) : a.order();
    std::vector<ConvergenceRow> rows;
    rows.reserve(ms.size());
    for (long m : ms) {
        std::vector<Rational> errors(static_cast<std::size_t>(nmax));
        for (int n = 1; n <= nmax; ++n) {
            const Rational& kn = kappa.kappa(n);
            if (n % 2 == 0) {
                // kappa_n of the rescaled power is kappa_n / m^{n/2 - 1}
                const Rational rescaled = kn / Rational(m).pow(n / 2 - 1);
                const Rational target = (n == 2) ? Rational(1) : Rational(0);
                errors[static_cast<std::size_t>(n) - 1] = (rescaled - target).abs();
            } else {
                // odd cumulants decay like m^{1-n/2}; their square is rational
                errors[static_cast<std::size_t>(n) - 1] = kn * kn / Rational(m).pow(n - 2);
            }
        }
        rows.push_back(ConvergenceRow{m, std::move(errors), 1});
    }
    return rows;
}

std::string table_to_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "m,n,error,error_decimal\n";
    for (const auto& row : rows) {
        for (std::size_t n = 0; n < row.coeff_errors.size(); ++n) {
            const Rational& e = row.coeff_errors[n];
            out << row.m << "," << (row.first_index + static_cast<int>(n)) << "," << e.str() << ","
                << e.decimal(12) << "\n";
        }
    }
    return out.str();
}

}  // namespace tfps
