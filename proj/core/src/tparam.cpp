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

#include "tfps/tparam.hpp"

#include "tfps/errors.hpp"

namespace tfps {

TParam TParam::generic(Rational t) {
    if (t.is_nonnegative_integer())
        throw ParameterError("generic mode requires t outside Z>=0, got t = " + t.str());
    return TParam(std::move(t), 0);
}

TParam TParam::finite(int d) {
    if (d < 1) throw ParameterError("finite mode requires d >= 1, got d = " + std::to_string(d));
    return TParam(Rational(d), d);
}

TParam TParam::parse(const std::string& text) {
    if (text.rfind("d:", 0) == 0) {
        const std::string rest = text.substr(2);
        try {
            std::size_t pos = 0;
            const int d = std::stoi(rest, &pos);
            if (pos != rest.size()) throw ParseError("invalid finite-mode parameter: '" + text + "'");
            return finite(d);
        } catch (const ParameterError&) {
            throw;
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("invalid finite-mode parameter: '" + text + "'");
        }
    }
    return generic(Rational::parse(text));
}

int TParam::d() const {
    if (!is_finite()) throw ParameterError("d() called on a generic-mode parameter");
    return finite_d_;
}

std::string TParam::str() const {
    return is_finite() ? "d:" + std::to_string(finite_d_) : t_.str();
}

void TParam::require_support(const TruncatedSeries& a) const {
    if (!is_finite()) return;
    const int deg = a.support_degree();
    if (deg > finite_d_)
        throw DomainError("finite mode d = " + std::to_string(finite_d_) +
                          " requires support <= d, found degree " + std::to_string(deg));
}

}  // namespace tfps
