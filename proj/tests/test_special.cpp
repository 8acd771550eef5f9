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

#include "tfps/cumulants.hpp"
#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"
#include "tfps/special.hpp"
#include "tfps/tconv.hpp"
#include "testutil.hpp"

using namespace tfps;

TEST_SUITE("special") {

TEST_CASE("binomial series: geometric, degenerate, and polynomial cases") {
    const TParam m1 = TParam::generic(Rational(-1));
    CHECK(binomial_series(Rational(1), m1, 4) ==
          make_series({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}, 4));
    CHECK(binomial_series(Rational(0), m1, 3) == TruncatedSeries::one(3));
    CHECK(binomial_series(Rational(2), TParam::finite(3), 3) ==
          make_series({Rational(1), Rational(-6), Rational(12), Rational(-8)}, 3));
}

TEST_CASE("hermite series: double factorials at t=-1") {
    const TruncatedSeries h = hermite_series(TParam::generic(Rational(-1)), 8);
    CHECK(h[0] == Rational(1));
    CHECK(h[2] == Rational(1));
    CHECK(h[4] == Rational(3));
    CHECK(h[6] == Rational(15));
    CHECK(h[8] == Rational(105));
    for (int k = 1; k <= 7; k += 2) CHECK(h[k] == Rational(0));
}

TEST_CASE("hermite flow: time zero, time one, finite mode") {
    const TParam t = TParam::generic(Rational(7, 3));
    CHECK(hermite_semigroup(Rational(0), t, 6) == TruncatedSeries::one(6));
    CHECK(hermite_semigroup(Rational(1), t, 6) == hermite_series(t, 6));
    CHECK_THROWS_AS(hermite_semigroup(Rational(-1), t, 6), DomainError);

    const TruncatedSeries h2 = hermite_series(TParam::finite(2), 2);
    CHECK(h2 == make_series({Rational(1), Rational(0), Rational(-1, 2)}, 2));
}

TEST_CASE("hermite flow has cumulant transform s z^2") {
    std::vector<TParam> params = test::generic_t_set();
    params.push_back(TParam::finite(4));
    const Rational s(5, 3);
    for (const TParam& t : params) {
        const CumulantVector k = c_transform(hermite_semigroup(s, t, 6), t);
        const int nmax = t.is_finite() ? t.d() : 6;
        for (int i = 1; i <= nmax; ++i) CHECK(k.kappa(i) == (i == 2 ? s : Rational(0)));
    }
}

TEST_CASE("hermite flow composes additively") {
    std::vector<TParam> params = test::generic_t_set();
    params.push_back(TParam::finite(3));
    params.push_back(TParam::finite(5));
    const Rational s1(3, 4), s2(7, 2);
    for (const TParam& t : params) {
        const TruncatedSeries lhs =
            tconv(hermite_semigroup(s1, t, 10), hermite_semigroup(s2, t, 10), t);
        CHECK(lhs == hermite_semigroup(s1 + s2, t, 10));
    }
}

TEST_CASE("laguerre series: rising factorials at t=-1") {
    const Rational b(5, 2);
    const TruncatedSeries l = laguerre_series(b, TParam::generic(Rational(-1)), 5);
    for (int k = 0; k <= 5; ++k) CHECK(l[k] == rising_factorial(b, k));
    CHECK_THROWS_AS(laguerre_series(Rational(0), TParam::generic(Rational(-1)), 3), DomainError);
    CHECK_THROWS_AS(laguerre_series(Rational(-2), TParam::generic(Rational(1, 2)), 3), DomainError);
}

TEST_CASE("laguerre rates add under the convolution") {
    const TParam t = TParam::generic(Rational(1, 2));
    const TruncatedSeries lhs =
        tconv(laguerre_series(Rational(1), t, 6), laguerre_series(Rational(2), t, 6), t);
    CHECK(lhs == laguerre_series(Rational(3), t, 6));
}

TEST_CASE("laguerre in finite mode is a polynomial image") {
    const int d = 4;
    const Rational lam(3, 2);
    // the degree-d polynomial with coefficient (-1)^k (lam d)_k (d)_k / (d^k k!) at x^{d-k}
    std::vector<Rational> poly;
    for (int k = 0; k <= d; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        poly.push_back(sign * falling_factorial(lam * Rational(d), k) *
                       falling_factorial(Rational(d), k) /
                       (Rational(d).pow(k) * factorial(k)));
    }
    CHECK(iota_d(poly) == laguerre_series(lam, TParam::finite(d), d));
}

TEST_CASE("hypergeometric specializations reproduce the dedicated families") {
    for (const TParam& t : test::generic_t_set()) {
        const HypergeometricSpec plain{{}, {}, t};
        CHECK(dilate(hypergeometric_series(plain, 8), Rational(5, 2)) ==
              binomial_series(Rational(5, 2), t, 8));

        const Rational b(7, 5);
        const HypergeometricSpec upper_only{{b}, {}, t};
        CHECK(dilate(hypergeometric_series(upper_only, 8), Rational(1) / t.t()) ==
              laguerre_series(b, t, 8));

        // one lower parameter, dilated by t
        const Rational a(3, 5);
        const HypergeometricSpec lower_only{{}, {a}, t};
        const TruncatedSeries bessel = dilate(hypergeometric_series(lower_only, 6), t.t());
        for (int k = 0; k <= 6; ++k) {
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(bessel[k] == sign * falling_factorial(t.t(), k) * t.t().pow(k) /
                                   (factorial(k) * falling_factorial(t.t() * a, k)));
        }

        // one upper, one lower
        const HypergeometricSpec jacobi{{b}, {a}, t};
        const TruncatedSeries j = hypergeometric_series(jacobi, 6);
        for (int k = 0; k <= 6; ++k) {
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(j[k] == sign * falling_factorial(t.t(), k) *
                              falling_factorial(t.t() * b, k) /
                              (factorial(k) * falling_factorial(t.t() * a, k)));
        }
    }
}

TEST_CASE("hypergeometric spec validation rejects vanishing lower factorials") {
    const TParam t = TParam::generic(Rational(-2));
    // t*a = -2 * (-3/2) = 3 in Z>=0
    const HypergeometricSpec bad{{}, {Rational(-3, 2)}, t};
    CHECK_THROWS_AS(hypergeometric_series(bad, 4), ParameterError);
}

TEST_CASE("closure holds for one-upper-parameter specs with added rates") {
    for (const TParam& t : test::generic_t_set()) {
        const Rational b1(2, 5), b2(3, 5);
        const HypergeometricSpec s1{{b1}, {}, t};
        const HypergeometricSpec s2{{b2}, {}, t};
        const HypergeometricSpec good{{b1 + b2}, {}, t};
        const HypergeometricSpec bad{{b1 + b2 + Rational(1, 7)}, {}, t};
        CHECK(compare_closure(s1, s2, good, 12));
        CHECK(!compare_closure(s1, s2, bad, 12));
    }
}

TEST_CASE("closure fails on both sides for the bare exponential specs") {
    // with no parameters both the series product identity and the
    // convolution identity are false; the equivalence still holds
    const TParam t = TParam::generic(Rational(1, 2));
    const HypergeometricSpec s{{}, {}, t};
    CHECK(!compare_closure(s, s, s, 8));

    // series side: exp(x)^2 != exp(x), checked on truncations
    std::vector<Rational> e;
    for (int k = 0; k <= 8; ++k) e.push_back(Rational(1) / factorial(k));
    const TruncatedSeries expx(std::move(e), 8);
    CHECK(mul(expx, expx) != expx);
}

TEST_CASE("coefficient reversal embedding and its inverse") {
    CHECK(iota_d({Rational(1), Rational(-3), Rational(2)}) ==
          make_series({Rational(1), Rational(-3), Rational(2)}, 2));
    // x^d maps to the unit series
    CHECK(iota_d({Rational(1), Rational(0), Rational(0), Rational(0)}) ==
          make_series({Rational(1)}, 3));

    test::Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<Rational> f = test::random_monic_poly(rng, 3);
        CHECK(iota_d_inv(iota_d(f), 3) == f);
    }

    CHECK_THROWS_AS(iota_d({Rational(2), Rational(1)}), DomainError);
    const TruncatedSeries wide = make_series({Rational(1), Rational(0), Rational(1)}, 2);
    CHECK_THROWS_AS(iota_d_inv(wide, 1), DomainError);
}

}  // TEST_SUITE
