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

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace tfps {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; there is no implicit conversion
/// to or from floating point.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parses "p/q" or "p" with optional sign. Throws ParseError on anything
    /// else (including q == 0).
    static Rational parse(const std::string& text);

    /// Exact conversion from a finite double (every finite double is dyadic).
    static Rational from_double(double x);

    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
    }

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_nonnegative_integer() const { return is_integer() && mpq_sgn(q_.get_mpq_t()) >= 0; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    /// Canonical "p/q", or "p" when the denominator is 1. The canonical
    /// form makes re-serialization byte-identical.
    std::string str() const;

    /// Fixed-point decimal rendering with `digits` fractional digits,
    /// rounded half away from zero. For human-readable CSV columns only.
    std::string decimal(int digits) const;

    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;  // canonical: lowest terms, positive denominator
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tfps
