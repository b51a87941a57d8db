// Copyright 2026 The qgo Authors
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

#ifndef QGO_UNITS_HPP
#define QGO_UNITS_HPP

namespace qgo {

/// Unit conventions, in one place:
///
///   quantity              external unit    internal unit
///   --------------------  ---------------  -------------------------
///   time                  ns               ns
///   frequency (f)         MHz / GHz        angular, rad/ns (2 pi f)
///   decay/dephasing rate  1/us (from us)   1/ns (no 2 pi factor)
///   control amplitudes    MHz (files)      rad/ns
///
/// Hamiltonian matrix elements are angular frequencies; Lindblad rates are
/// inverse lifetimes.  hbar = 1 throughout.

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Ordinary frequency in MHz -> angular frequency in rad/ns.
constexpr double mhz(double f) { return kTwoPi * f * 1e-3; }

/// Ordinary frequency in GHz -> angular frequency in rad/ns.
constexpr double ghz(double f) { return kTwoPi * f; }

/// Angular frequency in rad/ns -> ordinary frequency in MHz.
constexpr double to_mhz(double w) { return w / kTwoPi * 1e3; }

/// Lifetime in us -> rate in 1/ns.
constexpr double rate_from_us(double lifetime_us) {
  return 1.0 / (lifetime_us * 1e3);
}

}  // namespace qgo

#endif  // QGO_UNITS_HPP
