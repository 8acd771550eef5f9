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

#include <doctest.h>

#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"
#include "tfps/rational.hpp"
#include "testutil.hpp"

using namespace tfps;

TEST_SUITE("rational") {

TEST_CASE("canonical form: lowest terms, positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("parse accepts p and p/q, rejects junk") {
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("+4") == Rational(4));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("parse/str round trip is byte-identical") {
    test::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r = test::random_rational(rng, 5000, 5000);
        CHECK(Rational::parse(r.str()) == r);
        CHECK(Rational::parse(r.str()).str() == r.str());
    }
}

TEST_CASE("field arithmetic") {
    const Rational a(3, 4), b(-5, 6);
    CHECK((a + b).str() == "-1/12");
    CHECK((a - b).str() == "19/12");
    CHECK((a * b).str() == "-5/8");
    CHECK((a / b).str() == "-9/10");
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("pow with negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(5) == Rational(-32));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(2, 3).decimal(6) == "0.666667");
    CHECK(Rational(-1, 2).decimal(3) == "-0.500");
    CHECK(Rational(1, 8).decimal(2) == "0.13");
    CHECK(Rational(5).decimal(2) == "5.00");
    CHECK(Rational(0).decimal(4) == "0.0000");
    CHECK(Rational(65, 24).decimal(12) == "2.708333333333");
}

TEST_CASE("from_double is exact on dyadics") {
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational::from_double(-1.5) == Rational(-3, 2));
    CHECK(Rational::from_double(0.0) == Rational(0));
}

TEST_CASE("integer predicates") {
    CHECK(Rational(4).is_nonnegative_integer());
    CHECK(Rational(0).is_nonnegative_integer());
    CHECK(!Rational(-4).is_nonnegative_integer());
    CHECK(!Rational(1, 2).is_nonnegative_integer());
}

TEST_CASE("falling and rising factorials") {
    // (t)_k falling at small explicit points
    CHECK(falling_factorial(Rational(-1), 3) == Rational(-6));   // (-1)(-2)(-3)
    CHECK(falling_factorial(Rational(3), 5) == Rational(0));     // hits zero factor
    CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
    CHECK(falling_factorial(Rational(7), 0) == Rational(1));
    CHECK(rising_factorial(Rational(3), 3) == Rational(60));     // 3*4*5
    CHECK(rising_factorial(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(4), 2, PochhammerKind::falling) == Rational(12));
    CHECK(pochhammer(Rational(4), 2, PochhammerKind::rising) == Rational(20));
}

TEST_CASE("falling factorial table matches pointwise values") {
    test::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = test::random_rational(rng);
        const auto table = falling_factorial_table(a, 8);
        for (int k = 0; k <= 8; ++k)
            CHECK(table[static_cast<std::size_t>(k)] == falling_factorial(a, k));
    }
}

TEST_CASE("(-1)_k equals (-1)^k k! and (-a)_k flips to rising") {
    for (int k = 0; k <= 8; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(falling_factorial(Rational(-1), k) == sign * factorial(k));
    }
    test::Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = test::random_rational(rng);
        for (int k = 0; k <= 6; ++k) {
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(falling_factorial(-a, k) == sign * rising_factorial(a, k));
        }
    }
}

}  // TEST_SUITE
