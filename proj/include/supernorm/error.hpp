// Copyright 2026 The supernorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace supernorm {

/// Malformed shapes, non-finite entries, unknown names.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Schatten exponent outside [1, inf].
class InvalidExponent : public InvalidInput {
 public:
  explicit InvalidExponent(const std::string& what) : InvalidInput(what) {}
};

/// An operation was called on an input that violates its stated precondition
/// (for example a PSD-restricted computation on a non-CP map).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// The instance is valid but too large for the requested method.
class UnsupportedInstance : public std::runtime_error {
 public:
  explicit UnsupportedInstance(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace supernorm
