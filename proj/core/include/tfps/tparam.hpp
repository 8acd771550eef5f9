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

#include "tfps/rational.hpp"
#include "tfps/series.hpp"

namespace tfps {

/// The deformation parameter of the convolution. Two modes:
///   - generic: a rational t outside Z>=0, so every falling factorial
///     (t)_k is nonzero and all orders are reachable;
///   - finite: a positive integer d, restricted to series supported on
///     degrees <= d. Identities in finite mode are the exact evaluation of
///     the generic rational functions of t at t = d.
class TParam {
public:
    static TParam generic(Rational t);
    static TParam finite(int d);

    /// Accepts a rational string ("-1", "7/3") for generic mode or "d:N"
    /// for finite mode.
    static TParam parse(const std::string& text);

    bool is_finite() const { return finite_d_ > 0; }
    int d() const;

    /// The scalar value of t in either mode (equals d in finite mode).
    const Rational& t() const { return t_; }

    std::string str() const;

    bool operator==(const TParam& o) const { return finite_d_ == o.finite_d_ && t_ == o.t_; }

    /// Throws DomainError unless, in finite mode, a is supported on
    /// degrees <= d. No-op in generic mode.
    void require_support(const TruncatedSeries& a) const;

private:
    TParam(Rational t, int finite_d) : t_(std::move(t)), finite_d_(finite_d) {}

    Rational t_;
    int finite_d_ = 0;  // 0 means generic mode
};

}  // namespace tfps
