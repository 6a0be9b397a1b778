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

#include "spinsearch/svg.hpp"

#include <algorithm>
#include <cmath>

#include "spinsearch/csv.hpp"

namespace spinsearch {

std::string spectrum_svg(const Spectrum& spectrum, const std::string& title) {
  constexpr double width = 840.0;
  constexpr double height = 320.0;
  constexpr double margin = 40.0;
  const double baseline = height / 2.0;

  double f_min = 0.0;
  double f_max = 1.0;
  if (!spectrum.peaks.empty()) {
    f_min = f_max = spectrum.peaks.front().frequency_hz;
    for (const auto& p : spectrum.peaks) {
      f_min = std::min(f_min, p.frequency_hz);
      f_max = std::max(f_max, p.frequency_hz);
    }
  }
  if (f_max == f_min) {
    f_min -= 1.0;
    f_max += 1.0;
  }
  const double a_max = std::max(spectrum.max_abs_amplitude(), 1e-300);

  // high frequency on the left
  auto x_of = [&](double f) {
    return margin + (f_max - f) / (f_max - f_min) * (width - 2.0 * margin);
  };
  auto y_of = [&](double a) { return baseline - a / a_max * (baseline - margin); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(width) +
         "\" height=\"" + format_number(height) + "\" viewBox=\"0 0 " + format_number(width) +
         " " + format_number(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <text x=\"" + format_number(width / 2.0) +
         "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         title + "</text>\n";
  svg += "  <line x1=\"" + format_number(margin) + "\" y1=\"" + format_number(baseline) +
         "\" x2=\"" + format_number(width - margin) + "\" y2=\"" + format_number(baseline) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "  <text x=\"" + format_number(margin) + "\" y=\"" + format_number(height - 8.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + format_number(f_max) +
         " Hz</text>\n";
  svg += "  <text x=\"" + format_number(width - margin) + "\" y=\"" +
         format_number(height - 8.0) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         format_number(f_min) + " Hz</text>\n";

  for (const auto& p : spectrum.peaks) {
    const double x = x_of(p.frequency_hz);
    const double y = y_of(p.amplitude);
    const char* color = p.amplitude >= 0.0 ? "black" : "crimson";
    svg += "  <line x1=\"" + format_number(x) + "\" y1=\"" + format_number(baseline) +
           "\" x2=\"" + format_number(x) + "\" y2=\"" + format_number(y) + "\" stroke=\"" +
           color + "\" stroke-width=\"2\"><title>transition " +
           std::to_string(p.transition_id) + ": " + format_number(p.amplitude) +
           "</title></line>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace spinsearch
