// Copyright 2026 The LWI Simulator Authors
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

namespace lwi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter failed validation; `field()` names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Both a pump rate and a photon number were given for the same channel.
class ConflictError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A photon number was given on a channel with zero spontaneous rate.
class IllDefinedPumpError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Operation called outside its domain (e.g. non-resonant parameters for a
/// resonant closed form).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Basis, eigensystem or steady state is not uniquely defined.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition (non-Hermitian Hamiltonian, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Time integration lost physicality; retry with a smaller step.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lwi
