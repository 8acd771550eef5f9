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

#include <string>
#include <vector>

#include "tfps/rational.hpp"
#include "tfps/series.hpp"
#include "tfps/tparam.hpp"

namespace tfps {

/// One row of a convergence table: exact per-index deviations from the
/// limit object at sample size m. For the law-of-large-numbers table the
/// entries are series-coefficient deviations (index 0..N); for the central
/// limit table they are cumulant deviations (index n = 1..N, odd entries
/// tracked squared to stay rational).
struct ConvergenceRow {
    long m = 0;
    std::vector<Rational> coeff_errors;
    int first_index = 0;  // the n-value of coeff_errors[0] (0 for LLN, 1 for CLT)
};

/// m-fold t-deformed convolution power, computed by repeated squaring of
/// the ordinary product on the phi_t side.
TruncatedSeries conv_power(const TruncatedSeries& a, long m, const TParam& t);

/// Deviation of dilate(conv_power(A, m), 1/m) from the binomial series with
/// rate kappa_1(A), one row per requested m.
std::vector<ConvergenceRow> lln_table(const TruncatedSeries& a, const TParam& t,
                                      const std::vector<long>& ms);

/// Cumulant-space deviation of the centered, variance-one rescaled power
/// from the Hermite limit. Requires kappa_1(A) = 0 and kappa_2(A) = 1.
/// Even n: |kappa_n(A)/m^{n/2-1} - [n==2]|. Odd n: kappa_n(A)^2 / m^{n-2}
/// (the square of the rescaled cumulant, which is rational for every m).
/// In finite mode rows carry entries for n <= d only.
std::vector<ConvergenceRow> clt_table(const TruncatedSeries& a, const TParam& t,
                                      const std::vector<long>& ms);

/// CSV with header "m,n,error,error_decimal": the exact rational and a
/// 12-digit decimal rendering per entry.
std::string table_to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace tfps
