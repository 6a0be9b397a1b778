/* Copyright 2026 The SpinSearch Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SPINSEARCH_ERRORS_HPP
#define SPINSEARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinsearch {

/// Base class for all failure modes raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigensolver did not converge within its iteration cap.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// No observed transition exists, so no ancilla matching can be built.
struct NoMatching : Error {
  using Error::Error;
};

/// Every candidate label assignment leaves a required state isolated.
struct ConstraintViolation : Error {
  using Error::Error;
};

/// Transition id outside the table.
struct UnknownTransition : Error {
  using Error::Error;
};

/// Selective pulses act only on observed transitions.
struct UnobservedTransition : Error {
  using Error::Error;
};

/// The two levels lie in different components of the observed-transition graph.
struct Unreachable : Error {
  using Error::Error;
};

/// An initial state cannot be prepared because a required swap is unreachable.
struct Unpreparable : Error {
  using Error::Error;
};

/// The ancilla transition of the marked state is missing from the matching.
struct UnsearchableState : Error {
  using Error::Error;
};

/// No peak survives the detection epsilon.
struct EmptySpectrum : Error {
  using Error::Error;
};

/// Config text does not conform to the documented grammar.
struct ParseError : Error {
  using Error::Error;
};

/// Config parsed but violates a domain invariant (message names the field).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace spinsearch

#endif  // SPINSEARCH_ERRORS_HPP
