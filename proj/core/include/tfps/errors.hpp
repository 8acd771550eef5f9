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

#include <stdexcept>
#include <string>

namespace tfps {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two series with different truncation orders were combined.
class TruncationMismatch : public Error {
public:
    explicit TruncationMismatch(const std::string& what) : Error(what) {}
};

/// A value precondition was violated (constant term, support, sign, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An invalid deformation or family parameter (t in Z>=0, vanishing
/// Pochhammer denominator, d < 1, ...).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (rational strings, JSON payloads).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A numerical diagnostic failed to converge.
class DiagnosticError : public Error {
public:
    explicit DiagnosticError(const std::string& what) : Error(what) {}
};

}  // namespace tfps
