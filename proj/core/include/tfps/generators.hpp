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

#include <functional>
#include <vector>

#include "tfps/rational.hpp"
#include "tfps/series.hpp"
#include "tfps/tparam.hpp"

namespace tfps {

/// Characteristic triplet (gamma, a, nu) of a jump-diffusion generator with
/// finitely supported jump measure: drift gamma, Gaussian variance a >= 0,
/// and rational atoms (position x != 0, weight w > 0). Finite support makes
/// every exponential moment of the jump part finite, so no growth condition
/// on nu needs checking.
struct LevyTriplet {
    struct Atom {
        Rational x;
        Rational w;
    };

    Rational gamma;
    Rational a;
    std::vector<Atom> nu;

    void validate() const;
};

/// Symbol of an infinitesimal generator: a series with zero constant term.
/// Multiplication by this series on the phi_t side is the generator action.
class EtaSeries {
public:
    explicit EtaSeries(TruncatedSeries series);

    const TruncatedSeries& series() const { return series_; }
    int order() const { return series_.order(); }

private:
    TruncatedSeries series_;
};

/// A one-parameter family s -> Q_s with Q_0 = 1 that is a semigroup under
/// the t-deformed convolution. Built-in closed forms (hermite, laguerre,
/// binomial drift, jump-diffusion) know their generator symbol exactly;
/// sampled families only expose Q_s through a callback and their symbol can
/// only be estimated.
class SeriesSemigroup {
public:
    enum class Kind { hermite, laguerre, binomial, levy, sampled };

    /// Callback contract: returns Q_s at the requested truncation order and
    /// must be safe to call concurrently (this class never caches).
    using Sampler = std::function<TruncatedSeries(const Rational& s, int order)>;

    static SeriesSemigroup hermite(TParam t);
    static SeriesSemigroup laguerre(TParam t);
    static SeriesSemigroup binomial(Rational lambda, TParam t);
    static SeriesSemigroup levy(LevyTriplet triplet, TParam t);
    static SeriesSemigroup sampled(Sampler sampler, TParam t);

    Kind kind() const { return kind_; }
    bool closed_form() const { return kind_ != Kind::sampled; }
    const TParam& t() const { return t_; }
    const LevyTriplet& triplet() const;
    const Rational& rate() const;

    /// Q_s at the given order; s >= 0.
    TruncatedSeries sample(const Rational& s, int order) const;

private:
    SeriesSemigroup(Kind kind, TParam t) : kind_(kind), t_(std::move(t)) {}

    Kind kind_;
    TParam t_;
    Rational lambda_;       // binomial drift rate
    LevyTriplet triplet_;   // levy data
    Sampler sampler_;       // sampled families
};

/// Exact generator symbol of a closed-form family:
///   hermite:  -z^2 / (2t)
///   laguerre: t log(1 - z/t)
///   binomial: -lambda z
///   levy:     -gamma z + (a/2) z^2
///             + sum_atoms w (e^{-xz} - 1 + xz [|x| <= 1]) expanded
/// Sampled families are rejected; use eta_estimate.
EtaSeries eta_closed_form(const SeriesSemigroup& sg, int order);

/// Finite-difference estimate of the generator symbol of a sampled family,
/// one Richardson (polynomial-at-zero) extrapolation per coefficient over
/// the given decreasing positive s grid. The tableau is computed in exact
/// arithmetic; only the reported values are doubles.
struct EtaEstimate {
    std::vector<double> coeffs;
    std::vector<double> error_estimates;
};

EtaEstimate eta_estimate(const SeriesSemigroup& sg, const std::vector<Rational>& s_values,
                         int order);

/// Generator action on A: conjugation of multiplication by eta, i.e.
/// coefficient k of the result is
///   sum_{l=1}^{k} eta_l (t-k+1)(t-k+2)...(t-k+l) a_{k-l},
/// the exact form of phi_t^{-1}(eta * phi_t(A)) that stays division-free
/// and evaluates finite mode exactly at t = d.
TruncatedSeries generator_apply(const EtaSeries& eta, const TruncatedSeries& a, const TParam& t);

/// Time-s flow of the semigroup with symbol eta applied to A:
/// phi_t^{-1}(phi_t(A) * exp(s eta)), exact for rational s >= 0.
TruncatedSeries evolve(const TruncatedSeries& a, const EtaSeries& eta, const Rational& s,
                       const TParam& t);

/// Residuals of the forward evolution equation
///   d/ds phi_t(F(s)) = eta * phi_t(F(s)),   F(s) = evolve(A, eta, s).
/// fd_residual: max over coefficients of the central-difference defect at
/// step h (exact arithmetic inside, reported as double). exact_residual:
/// max coefficient deviation of phi_t(F(s)) from phi_t(A) exp(s eta); an
/// exact rational that must be zero.
struct ForwardCheck {
    double fd_residual = 0.0;
    Rational exact_residual;
};

ForwardCheck forward_residual(const TruncatedSeries& a, const EtaSeries& eta, const Rational& s,
                              double h, const TParam& t);

/// Generator of a polynomial convolution flow: conjugates generator_apply
/// through the coefficient-reversal embedding. Requires a monic degree-d
/// polynomial and a family in finite mode at the same d. For the hermite
/// family this is the heat operator -(1/2d) d^2/dx^2.
std::vector<Rational> finite_free_generator_apply(const std::vector<Rational>& f,
                                                  const SeriesSemigroup& sg, int d);

}  // namespace tfps
