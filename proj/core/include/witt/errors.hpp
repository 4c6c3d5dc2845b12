/*
   Copyright 2026 The wittkit authors

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

#ifndef WITT_ERRORS_HPP
#define WITT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace witt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact arithmetic / polynomials
class NotDivisibleError : public Error {
   public:
    explicit NotDivisibleError(const std::string& msg) : Error("NotDivisible: " + msg) {}
};
class NonUnitDerivativeError : public Error {
   public:
    explicit NonUnitDerivativeError(const std::string& msg) : Error("NonUnitDerivative: " + msg) {}
};
class NotAUnitError : public Error {
   public:
    explicit NotAUnitError(const std::string& msg) : Error("NotAUnit: " + msg) {}
};
class ShapeMismatchError : public Error {
   public:
    explicit ShapeMismatchError(const std::string& msg) : Error("ShapeMismatch: " + msg) {}
};

// polynomial cache
class CacheMissError : public Error {
   public:
    explicit CacheMissError(const std::string& msg) : Error("CacheMiss: " + msg) {}
};
class CacheFormatError : public Error {
   public:
    explicit CacheFormatError(const std::string& msg) : Error("FormatError: " + msg) {}
};
class CacheKeyMismatchError : public Error {
   public:
    explicit CacheKeyMismatchError(const std::string& msg) : Error("KeyMismatch: " + msg) {}
};

// presentations / jets
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t position, const std::string& msg)
        : Error("SyntaxError at " + std::to_string(position) + ": " + msg), position(position) {}
    std::size_t position;
};
class DuplicateGeneratorError : public Error {
   public:
    explicit DuplicateGeneratorError(const std::string& msg) : Error("DuplicateGenerator: " + msg) {}
};
class TooLargeError : public Error {
   public:
    explicit TooLargeError(const std::string& msg) : Error("TooLarge: " + msg) {}
};

// delta rings
class NotAFrobeniusLiftError : public Error {
   public:
    explicit NotAFrobeniusLiftError(const std::string& msg) : Error("NotAFrobeniusLift: " + msg) {}
};

// elliptic curves / canonical lift
class SingularCurveError : public Error {
   public:
    explicit SingularCurveError(const std::string& msg) : Error("SingularCurve: " + msg) {}
};
class SpecialJError : public Error {
   public:
    explicit SpecialJError(const std::string& msg) : Error("SpecialJ: " + msg) {}
};
class NotOrdinaryError : public Error {
   public:
    explicit NotOrdinaryError(const std::string& msg) : Error("NotOrdinary: " + msg) {}
};
class BadReductionError : public Error {
   public:
    explicit BadReductionError(const std::string& msg) : Error("BadReduction: " + msg) {}
};
class SingularImageError : public Error {
   public:
    explicit SingularImageError(const std::string& msg) : Error("SingularImage: " + msg) {}
};
class UnsupportedDiscriminantError : public Error {
   public:
    explicit UnsupportedDiscriminantError(const std::string& msg) : Error("Unsupported: " + msg) {}
};
class CMTableMismatchError : public Error {
   public:
    explicit CMTableMismatchError(const std::string& msg) : Error("Mismatch: " + msg) {}
};
class NoConvergenceError : public Error {
   public:
    explicit NoConvergenceError(const std::string& msg) : Error("NoConvergence: " + msg) {}
};

// CLI
class UsageError : public Error {
   public:
    explicit UsageError(const std::string& msg) : Error("usage: " + msg) {}
};

}  // namespace witt

#endif
