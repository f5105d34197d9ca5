// Copyright 2026 The DQD Decoherence Authors
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

#ifndef DQD_ERRORS_HPP_
#define DQD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dqd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A state vector whose squared norm differs from 1 by more than 1e-12.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// An eigenvalue below the -1e-10 positivity tolerance.
class PositivityError : public Error {
public:
    using Error::Error;
};

/// A Hermiticity or unit-trace violation on a matrix claimed to be a state.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A superoperator that is not trace- or Hermiticity-preserving, or whose
/// output on a valid state is not a valid state.
class ChannelValidityError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

/// Raised when an iterative quadrature runs out of refinements. Carries the
/// last two estimates so callers can judge how far off the result was.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string &what, double previous, double last)
        : Error(what), previous_(previous), last_(last) {}

    double previous_estimate() const noexcept { return previous_; }
    double last_estimate() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

/// Config-file error tied to a 1-based line number (0 when the problem is
/// not attached to a single line, e.g. a missing key).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &message)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace dqd

#endif  // DQD_ERRORS_HPP_
