// src/ticks.cc

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

#include "diarscore/ticks.h"

#include <cstdio>

namespace diarscore {

namespace {
// Caps the integral part so that whole * kTicksPerSecond + frac never
// overflows: ~3e13 seconds is far beyond any recording.
constexpr std::int64_t kMaxWholeSeconds = 30'000'000'000'000;

constexpr bool IsDigit(char c) { return c >= '0' && c <= '9'; }
}  // namespace

std::optional<Ticks> ParseSeconds(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }

  std::int64_t whole = 0;
  std::size_t digits = 0;
  while (i < text.size() && IsDigit(text[i])) {
    whole = whole * 10 + (text[i] - '0');
    if (whole > kMaxWholeSeconds) return std::nullopt;
    ++digits;
    ++i;
  }

  std::int64_t frac = 0;
  std::size_t frac_digits = 0;
  bool round_up = false;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && IsDigit(text[i])) {
      if (frac_digits < 4) {
        frac = frac * 10 + (text[i] - '0');
      } else if (frac_digits == 4) {
        // First digit past the resolution decides the rounding direction.
        round_up = text[i] >= '5';
      }
      ++frac_digits;
      ++digits;
      ++i;
    }
  }

  if (digits == 0 || i != text.size()) return std::nullopt;

  while (frac_digits < 4) {
    frac *= 10;
    ++frac_digits;
  }

  Ticks ticks = whole * kTicksPerSecond + frac + (round_up ? 1 : 0);
  return negative ? -ticks : ticks;
}

std::string FormatSeconds(Ticks ticks) {
  const bool negative = ticks < 0;
  const Ticks abs = negative ? -ticks : ticks;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%04lld", negative ? "-" : "",
                static_cast<long long>(abs / kTicksPerSecond),
                static_cast<long long>(abs % kTicksPerSecond));
  return buf;
}

}  // namespace diarscore
