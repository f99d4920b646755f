// Copyright 2026 The gqc authors
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

namespace gqc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A control with a non-positive squeezing value, or a protocol that is
/// malformed as a control specification.
class InvalidControl : public Error {
 public:
  using Error::Error;
};

/// A matrix that fails a structural requirement (non-symplectic,
/// non-symmetric tangent, ...).
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// A covariance matrix or channel parameter violating the uncertainty
/// relation (Det sigma < 1, nu < 1, N < 1).
class UnphysicalState : public Error {
 public:
  using Error::Error;
};

/// Negative evolution time.
class InvalidTime : public Error {
 public:
  using Error::Error;
};

/// Non-positive integrator step.
class InvalidStep : public Error {
 public:
  using Error::Error;
};

/// Pure state with nonvanishing Tr[sigma^-1 sigma']: the purity term of the
/// QFI diverges and no value is reported.
class SingularPurityTerm : public Error {
 public:
  using Error::Error;
};

/// Cramer-Rao bound requested for a family carrying no information.
class NoInformation : public Error {
 public:
  using Error::Error;
};

/// The Fock-space truncation cannot hold the requested state.
class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

/// A density matrix failing positivity/trace requirements beyond tolerance.
class InvalidState : public Error {
 public:
  using Error::Error;
};

}  // namespace gqc
