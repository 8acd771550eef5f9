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

enum class PochhammerKind { falling, rising };

/// Falling factorial a(a-1)...(a-k+1); empty product 1 for k = 0.
Rational falling_factorial(const Rational& a, int k);

/// Rising factorial a(a+1)...(a+k-1); empty product 1 for k = 0.
Rational rising_factorial(const Rational& a, int k);

Rational pochhammer(const Rational& a, int k, PochhammerKind kind);

/// Table of falling factorials for k = 0..kmax; entry k holds a(a-1)...(a-k+1).
std::vector<Rational> falling_factorial_table(const Rational& a, int kmax);

/// k! as an exact rational.
Rational factorial(int k);

}  // namespace tfps
