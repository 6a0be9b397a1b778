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

#include "spinsearch/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace spinsearch {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string strip(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<double> parse_numbers(const std::string& text, const Line& line,
                                  const std::string& what) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line.number) + ": " + what +
                       ": bad number '" + token + "'");
    }
  }
  return out;
}

bool is_numeric_row(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) return false;
  const char c = t.front();
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  // pass 1: strip comments and blanks, keep line numbers for diagnostics
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      if (!strip(raw).empty()) lines.push_back({number, raw});
    }
  }

  RunConfig config;
  int spins = -1;
  std::vector<double> shifts;
  std::vector<std::vector<double>> dipolar;
  std::vector<std::vector<double>> scalar;
  bool have_threshold = false;
  double threshold = 0.01;

  std::string section;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string t = strip(line.text);

    if (t.front() == '[') {
      if (t.back() != ']') {
        throw ParseError("line " + std::to_string(line.number) + ": unterminated section header");
      }
      section = t.substr(1, t.size() - 2);
      if (section != "system" && section != "options") {
        throw ParseError("line " + std::to_string(line.number) + ": unknown section [" +
                         section + "]");
      }
      continue;
    }

    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line.number) + ": expected 'key = value'");
    }
    const std::string key = strip(t.substr(0, eq));
    const std::string value = strip(t.substr(eq + 1));

    auto read_matrix = [&](const char* name) {
      std::vector<std::vector<double>> m;
      if (!value.empty()) {
        throw ParseError("line " + std::to_string(line.number) + ": " + name +
                         " rows start on the following lines");
      }
      while (i + 1 < lines.size() && is_numeric_row(lines[i + 1].text)) {
        ++i;
        m.push_back(parse_numbers(strip(lines[i].text), lines[i], name));
      }
      if (m.empty()) {
        throw ParseError("line " + std::to_string(line.number) + ": " + name +
                         " has no matrix rows");
      }
      return m;
    };

    if (section == "system") {
      if (key == "spins") {
        spins = static_cast<int>(parse_numbers(value, line, "spins").at(0));
      } else if (key == "shifts_hz") {
        shifts = parse_numbers(value, line, "shifts_hz");
        if (shifts.empty()) {
          throw ParseError("line " + std::to_string(line.number) + ": shifts_hz is empty");
        }
      } else if (key == "dipolar_hz") {
        dipolar = read_matrix("dipolar_hz");
      } else if (key == "scalar_hz") {
        scalar = read_matrix("scalar_hz");
      } else {
        throw ParseError("line " + std::to_string(line.number) + ": unknown key '" + key +
                         "' in [system]");
      }
    } else if (section == "options") {
      if (key == "intensity_threshold") {
        threshold = parse_numbers(value, line, key).at(0);
        have_threshold = true;
      } else if (key == "peak_epsilon") {
        config.peak_epsilon = parse_numbers(value, line, key).at(0);
      } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_numbers(value, line, key).at(0));
      } else if (key == "output_dir") {
        config.output_dir = value;
      } else if (key == "labeling_csv") {
        config.labeling_csv = value;
      } else {
        throw ParseError("line " + std::to_string(line.number) + ": unknown key '" + key +
                         "' in [options]");
      }
    } else {
      throw ParseError("line " + std::to_string(line.number) +
                       ": key outside of any section");
    }
  }

  if (spins < 0) throw ParseError("missing 'spins' in [system]");
  if (shifts.empty()) throw ParseError("missing 'shifts_hz' in [system]");
  if (static_cast<int>(shifts.size()) != spins) {
    throw ParseError("shifts_hz has " + std::to_string(shifts.size()) + " entries, expected " +
                     std::to_string(spins));
  }

  SpinSystem system = SpinSystem::make(spins);
  system.shift_hz = shifts;
  if (!dipolar.empty()) system.dipolar_hz = dipolar;
  if (!scalar.empty()) system.scalar_hz = scalar;
  if (have_threshold) system.intensity_threshold = threshold;
  if (spins < 2) throw ValidationError("spins must be >= 2 (one ancilla plus work qubits)");
  system.validate();

  if (config.peak_epsilon < 0.0 || config.peak_epsilon >= 1.0) {
    throw ValidationError("peak_epsilon must be in [0, 1)");
  }
  config.system = std::move(system);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace spinsearch
