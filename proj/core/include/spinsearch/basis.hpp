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

#ifndef SPINSEARCH_BASIS_HPP
#define SPINSEARCH_BASIS_HPP

#include <bit>
#include <cstdint>
#include <string>

namespace spinsearch {

// Zeeman product basis conventions, used everywhere:
//   * bit value 0 = alpha = m_i +1/2, bit value 1 = beta = m_i -1/2
//   * spin 0 occupies the MOST significant bit of a basis index, so the
//     binary expansion of an index reads like the ket label |b0 b1 ... >
//   * total magnetic quantum number M = sum_i m_i

/// Bit of spin `spin` in basis index `z` of an `n`-spin register.
inline int spin_bit(std::uint32_t z, int spin, int n) {
  return static_cast<int>((z >> (n - 1 - spin)) & 1u);
}

/// Basis index with spin `spin` flipped.
inline std::uint32_t flip_spin(std::uint32_t z, int spin, int n) {
  return z ^ (1u << (n - 1 - spin));
}

/// Number of beta (bit 1) spins in `z`.
inline int beta_count(std::uint32_t z) { return std::popcount(z); }

/// Total M of basis state `z`: (n - 2 * #beta) / 2.
inline double basis_mz(std::uint32_t z, int n) {
  return 0.5 * (n - 2 * beta_count(z));
}

/// Zero-padded binary string of `code`, spin 0 first.
inline std::string bit_string(std::uint32_t code, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int i = 0; i < n_bits; ++i) {
    if ((code >> (n_bits - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

}  // namespace spinsearch

#endif  // SPINSEARCH_BASIS_HPP
