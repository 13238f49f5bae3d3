// Copyright 2026 The bosonic_mac Authors
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

#ifndef BOSONIC_MAC_ERRORS_HPP
#define BOSONIC_MAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmac {

/// Invalid argument or violated precondition. The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A covariance matrix that cannot describe a quantum state (det < 1/16).
class UnphysicalStateError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A Gaussian input whose own photon number exceeds the user's budget.
class FeasibilityError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Fock-space truncation too small for the requested state.
class TruncationError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// An iterative numeric routine failed to converge. The CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
   public:
    NumericError(const std::string &what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {
    }

    double residual() const noexcept {
        return residual_;
    }

   private:
    double residual_;
};

}  // namespace bmac

#endif
