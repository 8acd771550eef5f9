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

#include "tfps/rational.hpp"

#include <cmath>
#include <ostream>

#include "tfps/errors.hpp"

namespace tfps {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    if (!valid_integer_token(num)) throw ParseError("invalid rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);  // mpz rejects an explicit plus
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(num)));
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den) || den[0] == '+' || den[0] == '-')
        throw ParseError("invalid rational: '" + text + "'");
    const mpz_class denz(den);
    if (denz == 0) throw ParseError("invalid rational (zero denominator): '" + text + "'");
    return Rational(mpq_class{mpz_class(num), denz});
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite double cannot become a rational");
    return Rational(mpq_class(x));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("rational division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("zero to a negative power");
        return Rational(0);
    }
    mpz_class num, den;
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), mag);
    mpq_class out = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
    out.canonicalize();
    return Rational(std::move(out));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw DomainError("negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = ::abs(q_.get_num()) * scale;
    const mpz_class& den = q_.get_den();
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) quot += 1;  // round half away from zero

    std::string body = quot.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    std::string out = (sign() < 0 && quot != 0) ? "-" : "";
    if (digits == 0) return out + body;
    out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
    out += ".";
    out += body.substr(body.size() - static_cast<std::size_t>(digits));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tfps
