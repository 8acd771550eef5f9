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

#include "tfps/classical.hpp"

#include "tfps/errors.hpp"
#include "tfps/pochhammer.hpp"
#include "tfps/tconv.hpp"

namespace tfps {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

void DiscreteLaw::validate() const {
    if (atoms.empty()) throw DomainError("discrete law needs at least one atom");
    Rational total(0);
    for (const Atom& atom : atoms) {
        if (atom.weight.sign() <= 0) throw DomainError("atom weights must be positive");
        total += atom.weight;
    }
    if (!total.is_one()) throw DomainError("atom weights must sum to 1, got " + total.str());
}

TruncatedSeries moments_discrete(const DiscreteLaw& law, int order) {
    law.validate();
    std::vector<Rational> m(idx(order) + 1, Rational(0));
    for (const DiscreteLaw::Atom& atom : law.atoms) {
        Rational xk(1);
        for (int k = 0; k <= order; ++k) {
            m[idx(k)] += atom.weight * xk;
            xk *= atom.position;
        }
    }
    return TruncatedSeries(std::move(m), order);
}

TruncatedSeries classical_conv(const TruncatedSeries& mx, const TruncatedSeries& my) {
    if (!mx[0].is_one() || !my[0].is_one())
        throw DomainError("moment series must have m_0 = 1");
    return tconv(mx, my, TParam::generic(Rational(-1)));
}

void MixtureSpec::validate() const {
    for (const BetaPair& p : beta_pairs) {
        if (p.b.sign() <= 0) throw DomainError("beta pair requires b > 0");
        if ((p.a - p.b).sign() <= 0) throw DomainError("beta pair requires a - b > 0");
    }
    for (const Rational& b : gamma_params)
        if (b.sign() <= 0) throw DomainError("gamma parameter must be positive");
    if (gamma_params.size() % 2 != 0)
        throw DomainError("mixture requires an even number of gamma factors");
}

TruncatedSeries mixture_moments(const MixtureSpec& spec, int order) {
    spec.validate();
    std::vector<Rational> m(idx(order) + 1, Rational(1));
    for (int k = 1; k <= order; ++k) {
        Rational mk(1);
        for (const MixtureSpec::BetaPair& p : spec.beta_pairs)
            mk *= rising_factorial(p.b, k) / rising_factorial(p.a, k);
        for (const Rational& b : spec.gamma_params) mk *= rising_factorial(b, k);
        m[idx(k)] = mk;
    }
    return TruncatedSeries(std::move(m), order);
}

std::vector<Rational> bdlp_cumulants(const std::vector<Rational>& c, const Rational& s) {
    if (s.sign() < 0) throw DomainError("process time s must be >= 0");
    std::vector<Rational> out(c.size());
    for (std::size_t n = 0; n < c.size(); ++n)
        out[n] = s * Rational(static_cast<long>(n) + 1) * c[n];
    return out;
}

}  // namespace tfps
