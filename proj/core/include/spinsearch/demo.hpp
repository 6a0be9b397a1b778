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

#ifndef SPINSEARCH_DEMO_HPP
#define SPINSEARCH_DEMO_HPP

#include "spinsearch/instance.hpp"

namespace spinsearch {

/// Fixed synthetic parameters of the bundled strongly coupled four-spin
/// demonstration system (one ancilla + three work qubits). The dipolar
/// couplings are comparable to the shift differences, so all sixteen
/// eigenstates mix product states and the spins are not individually
/// addressable.
SpinSystem four_spin_demo_system();

/// The demonstration instance with its hand-shaped labeling: exactly seven
/// of the eight ancilla transitions are observed, the all-ones work label is
/// the missing pair (searching it must fail), and the first initial state's
/// populations come out as the integers {+1, +2, -1, -2}.
///
/// The labeling is constructed deterministically from the eigensystem, so
/// repeated calls agree bit for bit.
LabeledInstance four_spin_demo();

}  // namespace spinsearch

#endif  // SPINSEARCH_DEMO_HPP
