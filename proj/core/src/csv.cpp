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

#include "spinsearch/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spinsearch/basis.hpp"

namespace spinsearch {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string levels_csv(const TransitionTable& table) {
  std::string out = "state_index,M,energy_hz\n";
  for (int s = 0; s < table.dim; ++s) {
    out += std::to_string(s) + ',' + format_number(table.level_mz[static_cast<std::size_t>(s)]) +
           ',' + format_number(table.level_energy[static_cast<std::size_t>(s)]) + '\n';
  }
  return out;
}

std::string transitions_csv(const TransitionTable& table) {
  std::string out = "transition_id,lower_state,upper_state,frequency_hz,intensity,observed\n";
  for (const auto& t : table.transitions) {
    out += std::to_string(t.id) + ',' + std::to_string(t.lower_state) + ',' +
           std::to_string(t.upper_state) + ',' + format_number(t.frequency_hz) + ',' +
           format_number(t.intensity) + ',' + (t.observed ? '1' : '0') + '\n';
  }
  return out;
}

std::string labeling_csv(const Labeling& labeling, const TransitionTable& table) {
  std::string out = "state_index,M,energy_hz,label_bits\n";
  for (int s = 0; s < table.dim; ++s) {
    out += std::to_string(s) + ',' + format_number(table.level_mz[static_cast<std::size_t>(s)]) +
           ',' + format_number(table.level_energy[static_cast<std::size_t>(s)]) + ',' +
           labeling.label_string(s) + '\n';
  }
  return out;
}

std::string spectrum_csv(const Spectrum& spectrum) {
  std::string out = "transition_id,frequency_hz,amplitude\n";
  for (const auto& p : spectrum.peaks) {
    out += std::to_string(p.transition_id) + ',' + format_number(p.frequency_hz) + ',' +
           format_number(p.amplitude) + '\n';
  }
  return out;
}

Labeling parse_labeling_csv(const std::string& text, const TransitionTable& table) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("labeling csv: empty file");

  std::vector<std::uint32_t> codes(static_cast<std::size_t>(table.dim));
  std::vector<char> seen(static_cast<std::size_t>(table.dim), 0);
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) {
      throw ParseError("labeling csv line " + std::to_string(number) + ": expected 4 columns");
    }
    int state = -1;
    try {
      state = std::stoi(cells[0]);
    } catch (const std::exception&) {
      throw ParseError("labeling csv line " + std::to_string(number) + ": bad state index");
    }
    if (state < 0 || state >= table.dim) {
      throw ValidationError("labeling csv line " + std::to_string(number) +
                            ": state index out of range");
    }
    const std::string& bits = cells[3];
    std::uint32_t code = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw ParseError("labeling csv line " + std::to_string(number) + ": bad label '" +
                         bits + "'");
      }
      code = (code << 1) | static_cast<std::uint32_t>(c - '0');
    }
    if (static_cast<int>(bits.size()) != [&] {
          int n = 0;
          while ((1 << n) < table.dim) ++n;
          return n;
        }()) {
      throw ValidationError("labeling csv line " + std::to_string(number) +
                            ": label has wrong bit count");
    }
    if (seen[static_cast<std::size_t>(state)]) {
      throw ValidationError("labeling csv line " + std::to_string(number) +
                            ": duplicate state index");
    }
    seen[static_cast<std::size_t>(state)] = 1;
    codes[static_cast<std::size_t>(state)] = code;
  }
  for (int s = 0; s < table.dim; ++s) {
    if (!seen[static_cast<std::size_t>(s)]) {
      throw ValidationError("labeling csv: state " + std::to_string(s) + " missing");
    }
  }
  return labeling_from_codes(codes, table);
}

Labeling load_labeling_csv(const std::string& path, const TransitionTable& table) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open labeling csv '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_labeling_csv(buffer.str(), table);
}

std::string pulse_program(const PulsePlan& plan, const TransitionTable& table) {
  std::string out =
      "# pulse program: transition-selective pi pulses, applied top to bottom\n"
      "# pi <transition_id>   (frequency_hz in the trailing comment)\n";
  for (int tid : plan.pulses) {
    const Transition& t = table.at(tid);
    out += "pi " + std::to_string(tid) + "   # " + format_number(t.frequency_hz) + " Hz\n";
  }
  return out;
}

}  // namespace spinsearch
