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

#ifndef SPINSEARCH_SVG_HPP
#define SPINSEARCH_SVG_HPP

#include <string>

#include "spinsearch/spectrum.hpp"

namespace spinsearch {

/// Stick plot of a spectrum. Frequency decreases left to right (spectrometer
/// convention); signed sticks extend above and below the baseline.
std::string spectrum_svg(const Spectrum& spectrum, const std::string& title);

}  // namespace spinsearch

#endif  // SPINSEARCH_SVG_HPP
