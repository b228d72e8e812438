// Copyright 2026 The pauli-lens Authors
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

namespace paulilens {

/// Base class of every error raised by the library. The C API maps each
/// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: shape mismatch, out-of-range index, p < 1, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The requested Hilbert-space dimension exceeds the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operator expected to have unit l2 norm does not.
class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& what, double measured_norm)
      : Error(what), measured_norm_(measured_norm) {}
  double measured_norm() const noexcept { return measured_norm_; }

 private:
  double measured_norm_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A Hamiltonian acts outside the support it was declared on.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// log Delta(rho) is undefined because a diagonal entry vanishes.
class SingularStateError : public Error {
 public:
  using Error::Error;
};

/// Unparseable or schema-violating JSON input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace paulilens
