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

#ifndef SPINSEARCH_CONFIG_HPP
#define SPINSEARCH_CONFIG_HPP

#include <cstdint>
#include <string>

#include "spinsearch/spin_system.hpp"

namespace spinsearch {

/// A parsed run configuration.
///
/// Grammar (see the project README for a worked example):
///
///   [system]
///   spins = 4
///   shifts_hz = nu0 nu1 ... (one value per spin)
///   dipolar_hz =            (full symmetric matrix, one row per line)
///       0    d01  d02  d03
///       d01  0    d12  d13
///       ...
///   scalar_hz =             (same layout)
///
///   [options]                (all optional)
///   intensity_threshold = 0.01
///   peak_epsilon = 1e-9
///   seed = 0
///   output_dir = out
///   labeling_csv = path/to/labels.csv
///
/// '#' starts a comment. Matrix rows follow their "key =" line and must be
/// indented or purely numeric. ParseError reports the offending line;
/// ValidationError reports the offending field or matrix cell.
struct RunConfig {
  SpinSystem system;
  double peak_epsilon = 1e-9;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  std::string labeling_csv;  ///< optional labeling override file
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace spinsearch

#endif  // SPINSEARCH_CONFIG_HPP
