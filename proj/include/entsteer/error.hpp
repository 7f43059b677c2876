// Copyright 2026 The entsteer Authors
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

namespace entsteer {

/// Raised when an argument violates a documented precondition
/// (out-of-range parameter, dimension mismatch, unsupported input).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operator fails the density-matrix checks.
class NotPhysical : public InvalidArgument {
  public:
    explicit NotPhysical(const std::string &what)
        : InvalidArgument("not a physical state: " + what) {}
};

/// Raised when a requested quantity has no valid definition for the input,
/// e.g. no uncertainty bound or no threshold inside [0, 1].
class NoSolution : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw InvalidArgument(msg);
    }
}

} // namespace detail
} // namespace entsteer
