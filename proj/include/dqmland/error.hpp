// Copyright 2026 dqmland authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dqmland {

/// Error raised while reading a DQM or QUBO document. Carries the 1-based
/// line number of the offending input when it is known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

 private:
    int line_;
};

/// Raised when an enumeration-backed operation is asked to walk more
/// variables than its cap allows.
class SizeCapError : public std::runtime_error {
 public:
    SizeCapError(int n, int cap)
        : std::runtime_error("enumeration over " + std::to_string(n) +
                             " variables exceeds the cap of " + std::to_string(cap) +
                             " (raise the cap explicitly to proceed)"),
          n_(n),
          cap_(cap) {}

    int n() const { return n_; }
    int cap() const { return cap_; }

 private:
    int n_;
    int cap_;
};

/// Raised when an instance lacks the structure an operation needs, e.g. a
/// threshold query on an instance with no invalid solutions.
class StructuralError : public std::runtime_error {
 public:
    explicit StructuralError(const std::string& message) : std::runtime_error(message) {}
};

/// Raised when a threshold is undefined for the given instance, e.g. the
/// all-tied cost landscape.
class DegenerateInstanceError : public std::runtime_error {
 public:
    explicit DegenerateInstanceError(const std::string& message)
        : std::runtime_error(message) {}
};

}  // namespace dqmland
