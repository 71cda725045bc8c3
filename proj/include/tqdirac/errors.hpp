// Copyright 2026 The tqdirac Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqd {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input outside a function's mathematical domain (non-positive
/// capacitance, non-Hermitian operator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The closed forms only cover identical qubits; raised for L1 != L2.
class UnsupportedCase : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed or invalid run configuration. Message names the key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Propagation lost norm or unitarity.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::size_t step)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace tqd
