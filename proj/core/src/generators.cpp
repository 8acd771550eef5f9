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

#include "tfps/generators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"
#include "tfps/special.hpp"
#include "tfps/tconv.hpp"

namespace tfps {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

void LevyTriplet::validate() const {
    if (a.sign() < 0) throw DomainError("gaussian part a must be >= 0");
    for (const Atom& atom : nu) {
        if (atom.x.is_zero()) throw DomainError("jump atoms must sit away from 0");
        if (atom.w.sign() <= 0) throw DomainError("jump weights must be positive");
    }
}

EtaSeries::EtaSeries(TruncatedSeries series) : series_(std::move(series)) {
    if (!series_[0].is_zero())
        throw DomainError("generator symbol must have zero constant term");
}

SeriesSemigroup SeriesSemigroup::hermite(TParam t) {
    return SeriesSemigroup(Kind::hermite, std::move(t));
}

SeriesSemigroup SeriesSemigroup::laguerre(TParam t) {
    return SeriesSemigroup(Kind::laguerre, std::move(t));
}

SeriesSemigroup SeriesSemigroup::binomial(Rational lambda, TParam t) {
    SeriesSemigroup sg(Kind::binomial, std::move(t));
    sg.lambda_ = std::move(lambda);
    return sg;
}

SeriesSemigroup SeriesSemigroup::levy(LevyTriplet triplet, TParam t) {
    triplet.validate();
    SeriesSemigroup sg(Kind::levy, std::move(t));
    sg.triplet_ = std::move(triplet);
    return sg;
}

SeriesSemigroup SeriesSemigroup::sampled(Sampler sampler, TParam t) {
    if (!sampler) throw DomainError("sampled family needs a callback");
    SeriesSemigroup sg(Kind::sampled, std::move(t));
    sg.sampler_ = std::move(sampler);
    return sg;
}

const LevyTriplet& SeriesSemigroup::triplet() const {
    if (kind_ != Kind::levy) throw DomainError("not a jump-diffusion family");
    return triplet_;
}

const Rational& SeriesSemigroup::rate() const {
    if (kind_ != Kind::binomial) throw DomainError("not a binomial drift family");
    return lambda_;
}

TruncatedSeries SeriesSemigroup::sample(const Rational& s, int order) const {
    if (s.sign() < 0) throw DomainError("semigroup parameter s must be >= 0");
    switch (kind_) {
        case Kind::hermite:
            return hermite_semigroup(s, t_, order);
        case Kind::laguerre:
            return s.is_zero() ? TruncatedSeries::one(order) : laguerre_series(s, t_, order);
        case Kind::binomial:
            return binomial_series(s * lambda_, t_, order);
        case Kind::levy:
            return evolve(TruncatedSeries::one(order), eta_closed_form(*this, order), s, t_);
        case Kind::sampled:
            return sampler_(s, order);
    }
    throw DomainError("unreachable");
}

EtaSeries eta_closed_form(const SeriesSemigroup& sg, int order) {
    const Rational& t = sg.t().t();
    std::vector<Rational> c(idx(order) + 1, Rational(0));
    switch (sg.kind()) {
        case SeriesSemigroup::Kind::hermite:
            if (order >= 2) c[2] = Rational(-1) / (Rational(2) * t);
            break;
        case SeriesSemigroup::Kind::laguerre: {
            // t log(1 - z/t), coefficient l is -1/(l t^{l-1})
            Rational tl(1);
            for (int l = 1; l <= order; ++l) {
                c[idx(l)] = Rational(-1) / (Rational(l) * tl);
                tl *= t;
            }
            break;
        }
        case SeriesSemigroup::Kind::binomial:
            // d/ds at 0 of phi_t(B_{s lambda}) = d/ds at 0 of exp(-s lambda z)
            if (order >= 1) c[1] = -sg.rate();
            break;
        case SeriesSemigroup::Kind::levy: {
            const LevyTriplet& lk = sg.triplet();
            if (order >= 1) c[1] = -lk.gamma;
            if (order >= 2) c[2] = lk.a / Rational(2);
            for (const LevyTriplet::Atom& atom : lk.nu) {
                // w (e^{-xz} - 1), compensated by +wxz for small jumps
                Rational term = atom.w;
                for (int k = 1; k <= order; ++k) {
                    term *= -atom.x / Rational(k);
                    c[idx(k)] += term;
                }
                if (order >= 1 && atom.x.abs() <= Rational(1)) c[1] += atom.w * atom.x;
            }
            break;
        }
        case SeriesSemigroup::Kind::sampled:
            throw DomainError("sampled family has no closed-form symbol; use eta_estimate");
    }
    return EtaSeries(TruncatedSeries(std::move(c), order));
}

EtaEstimate eta_estimate(const SeriesSemigroup& sg, const std::vector<Rational>& s_values,
                         int order) {
    if (sg.closed_form())
        throw DomainError("eta_estimate is for sampled families; closed forms know their symbol");
    const int n = static_cast<int>(s_values.size());
    if (n < 2) throw DomainError("need at least two sample points");
    for (int i = 0; i < n; ++i) {
        if (s_values[idx(i)].sign() <= 0) throw DomainError("sample points must be positive");
        if (i > 0 && !(s_values[idx(i)] < s_values[idx(i) - 1]))
            throw DomainError("sample points must be strictly decreasing");
    }

    // Difference quotients (phi_t(Q_s) - 1)/s, exact per node.
    std::vector<TruncatedSeries> quotients;
    quotients.reserve(idx(n));
    for (const Rational& s : s_values) {
        const TruncatedSeries q = phi_t(sg.sample(s, order), sg.t());
        std::vector<Rational> f(idx(order) + 1);
        for (int k = 0; k <= order; ++k)
            f[idx(k)] = (k == 0 ? q[0] - Rational(1) : q[k]) / s;
        quotients.emplace_back(std::move(f), order);
    }

    EtaEstimate out;
    out.coeffs.resize(idx(order) + 1);
    out.error_estimates.resize(idx(order) + 1);
    for (int k = 0; k <= order; ++k) {
        // Neville tableau extrapolating the polynomial through
        // (s_i, f_i(k)) to s = 0, kept exact.
        std::vector<Rational> row(idx(n));
        for (int i = 0; i < n; ++i) row[idx(i)] = quotients[idx(i)][k];
        Rational prev_diag = row[0];
        Rational prev_err(0);
        bool have_err = false;
        for (int j = 1; j < n; ++j) {
            for (int i = n - 1; i >= j; --i) {
                const Rational& si = s_values[idx(i)];
                const Rational& sij = s_values[idx(i - j)];
                row[idx(i)] = (sij * row[idx(i)] - si * row[idx(i) - 1]) / (sij - si);
            }
            const Rational err = (row[idx(j)] - prev_diag).abs();
            if (have_err && err > prev_err && err > Rational::from_double(1e-12))
                throw DiagnosticError("extrapolation error estimate grows; sequence not convergent");
            prev_diag = row[idx(j)];
            prev_err = err;
            have_err = true;
        }
        out.coeffs[idx(k)] = prev_diag.to_double();
        out.error_estimates[idx(k)] = prev_err.to_double();
    }
    return out;
}

TruncatedSeries generator_apply(const EtaSeries& eta, const TruncatedSeries& a, const TParam& t) {
    if (eta.order() != a.order())
        throw TruncationMismatch("symbol order " + std::to_string(eta.order()) +
                                 " differs from series order " + std::to_string(a.order()));
    t.require_support(a);
    const TruncatedSeries& e = eta.series();
    const int n = a.order();
    std::vector<Rational> c(idx(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        Rational ff(1);  // (t-k+1)...(t-k+l), extended one factor per l
        for (int l = 1; l <= k; ++l) {
            ff *= t.t() - Rational(k - l);
            if (!e[l].is_zero() && !a[k - l].is_zero()) acc += e[l] * ff * a[k - l];
        }
        c[idx(k)] = acc;
    }
    TruncatedSeries out(std::move(c), n);
    t.require_support(out);  // provably redundant at t = d, kept as a check
    return out;
}

TruncatedSeries evolve(const TruncatedSeries& a, const EtaSeries& eta, const Rational& s,
                       const TParam& t) {
    if (s.sign() < 0) throw DomainError("evolution time s must be >= 0");
    if (eta.order() != a.order())
        throw TruncationMismatch("symbol order " + std::to_string(eta.order()) +
                                 " differs from series order " + std::to_string(a.order()));
    const TruncatedSeries flow = formal_exp(scale(eta.series(), s));
    return phi_t_inv(mul(phi_t(a, t), flow), t);
}

ForwardCheck forward_residual(const TruncatedSeries& a, const EtaSeries& eta, const Rational& s,
                              double h, const TParam& t) {
    if (!(h > 0.0)) throw DomainError("step h must be positive");
    const Rational hr = Rational::from_double(h);
    if ((s - hr).sign() < 0) throw DomainError("need s - h >= 0 for the central difference");

    const auto flow_side = [&](const Rational& sigma) {
        return phi_t(evolve(a, eta, sigma, t), t);
    };
    const TruncatedSeries g_minus = flow_side(s - hr);
    const TruncatedSeries g_mid = flow_side(s);
    const TruncatedSeries g_plus = flow_side(s + hr);
    const TruncatedSeries target = mul(eta.series(), g_mid);

    const int kmax = t.is_finite() ? std::min(a.order(), t.d()) : a.order();
    ForwardCheck out;
    const Rational two_h = Rational(2) * hr;
    for (int k = 0; k <= kmax; ++k) {
        const Rational defect = (g_plus[k] - g_minus[k]) / two_h - target[k];
        out.fd_residual = std::max(out.fd_residual, std::abs(defect.to_double()));
    }

    const TruncatedSeries direct = mul(phi_t(a, t), formal_exp(scale(eta.series(), s)));
    Rational worst(0);
    for (int k = 0; k <= kmax; ++k) {
        const Rational d = (g_mid[k] - direct[k]).abs();
        if (d > worst) worst = d;
    }
    out.exact_residual = worst;
    return out;
}

std::vector<Rational> finite_free_generator_apply(const std::vector<Rational>& f,
                                                  const SeriesSemigroup& sg, int d) {
    if (d < 1) throw ParameterError("degree d must be >= 1");
    if (static_cast<int>(f.size()) != d + 1 || f.empty() || !f[0].is_one())
        throw DomainError("need a monic polynomial of degree d as coefficients a_0..a_d");
    if (!sg.t().is_finite() || sg.t().d() != d)
        throw ParameterError("family must be in finite mode at the same d");
    const TruncatedSeries image = iota_d(f);
    const EtaSeries eta = eta_closed_form(sg, d);
    return iota_d_inv(generator_apply(eta, image, sg.t()), d);
}

}  // namespace tfps
