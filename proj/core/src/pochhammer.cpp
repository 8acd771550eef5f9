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

#include "tfps/pochhammer.hpp"

#include "tfps/errors.hpp"

namespace tfps {

Rational falling_factorial(const Rational& a, int k) {
    if (k < 0) throw DomainError("falling factorial with negative length");
    Rational out(1);
    for (int i = 0; i < k; ++i) out *= a - Rational(i);
    return out;
}

Rational rising_factorial(const Rational& a, int k) {
    if (k < 0) throw DomainError("rising factorial with negative length");
    Rational out(1);
    for (int i = 0; i < k; ++i) out *= a + Rational(i);
    return out;
}

Rational pochhammer(const Rational& a, int k, PochhammerKind kind) {
    return kind == PochhammerKind::falling ? falling_factorial(a, k) : rising_factorial(a, k);
}

std::vector<Rational> falling_factorial_table(const Rational& a, int kmax) {
    if (kmax < 0) throw DomainError("negative table length");
    std::vector<Rational> table(static_cast<std::size_t>(kmax) + 1, Rational(1));
    for (int k = 1; k <= kmax; ++k)
        table[static_cast<std::size_t>(k)] = table[static_cast<std::size_t>(k) - 1] * (a - Rational(k - 1));
    return table;
}

Rational factorial(int k) {
    if (k < 0) throw DomainError("negative factorial");
    Rational out(1);
    for (int i = 2; i <= k; ++i) out *= Rational(i);
    return out;
}

}  // namespace tfps
