/*
   Copyright 2026 the mahler-relations authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

/// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text failed to parse; carries a 0-based character position.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    size_t pos;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Interval refinement hit its precision cap without reaching a decision.
class PrecisionError : public Error {
   public:
    using Error::Error;
};

/// det A(z) = 0: the matrix is not invertible over k(z).
class DegenerateSystemError : public Error {
   public:
    using Error::Error;
};

/// Evaluation hit a pole; `iterate` is the index j of the offending factor A(z^{q^j}).
class PoleHitError : public Error {
   public:
    PoleHitError(const std::string& what, long j) : Error(what), iterate(j) {}
    long iterate;
};

/// Some alpha^{q^l} on the orbit is a pole of the matrix; `level` = witnessing l.
class PoleOnOrbitError : public Error {
   public:
    PoleOnOrbitError(const std::string& what, long l) : Error(what), level(l) {}
    long level;
};

/// A recursion seed contradicts a constraint equation of the functional system.
class InconsistentSeedError : public Error {
   public:
    InconsistentSeedError(const std::string& what, long index) : Error(what), coeff_index(index) {}
    long coeff_index;
};

}  // namespace mahler
