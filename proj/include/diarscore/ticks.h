// include/diarscore/ticks.h

// Copyright 2026  The diarscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARSCORE_TICKS_H_
#define DIARSCORE_TICKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace diarscore {

// All times are integer ticks of 0.1 ms.  The annotation formats carry
// decimal seconds, so a decimal fixed-point representation keeps interval
// algebra exact: unions, intersections and subtractions partition durations
// without float slack.
using Ticks = std::int64_t;

inline constexpr Ticks kTicksPerSecond = 10000;

// Parses a plain decimal seconds value ("130.430000", "5", ".25", "-0.5")
// into ticks.  Digits beyond the tick resolution are rounded half away from
// zero.  Returns nullopt for anything else (exponents, stray characters,
// empty input, values too large for the tick range).
std::optional<Ticks> ParseSeconds(std::string_view text);

// Fixed-point rendering with exactly four decimals, no exponent.
// FormatSeconds(1304300) == "130.4300".
std::string FormatSeconds(Ticks ticks);

inline constexpr double ToSeconds(Ticks ticks) {
  return static_cast<double>(ticks) / kTicksPerSecond;
}

}  // namespace diarscore

#endif  // DIARSCORE_TICKS_H_
