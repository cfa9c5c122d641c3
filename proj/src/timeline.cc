// src/timeline.cc

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

#include "diarscore/timeline.h"

#include <algorithm>
#include <utility>

#include "diarscore/ticks.h"

namespace diarscore {

Timeline Timeline::Normalize(std::vector<Interval> raw) {
  for (const Interval &iv : raw) {
    if (iv.offset <= iv.onset) {
      throw DegenerateInterval("degenerate interval [" +
                               FormatSeconds(iv.onset) + ", " +
                               FormatSeconds(iv.offset) + ")");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval &a, const Interval &b) {
    return a.onset != b.onset ? a.onset < b.onset : a.offset < b.offset;
  });

  std::vector<Interval> merged;
  merged.reserve(raw.size());
  for (const Interval &iv : raw) {
    // Touching intervals merge too: [0,1) + [1,2) covers [0,2).
    if (!merged.empty() && iv.onset <= merged.back().offset) {
      merged.back().offset = std::max(merged.back().offset, iv.offset);
    } else {
      merged.push_back(iv);
    }
  }
  return Timeline(std::move(merged));
}

Ticks Timeline::Duration() const {
  Ticks total = 0;
  for (const Interval &iv : intervals_) total += iv.Length();
  return total;
}

Timeline Timeline::BridgeGaps(Ticks max_gap) const {
  if (max_gap < 0) {
    throw NegativeGap("bridge gap must be non-negative, got " +
                      FormatSeconds(max_gap));
  }
  std::vector<Interval> fused;
  fused.reserve(intervals_.size());
  for (const Interval &iv : intervals_) {
    if (!fused.empty() && iv.onset - fused.back().offset <= max_gap) {
      fused.back().offset = iv.offset;
    } else {
      fused.push_back(iv);
    }
  }
  return Timeline(std::move(fused));
}

Timeline Intersect(const Timeline &a, const Timeline &b) {
  std::vector<Interval> out;
  const auto &as = a.intervals();
  const auto &bs = b.intervals();
  std::size_t i = 0, j = 0;
  while (i < as.size() && j < bs.size()) {
    const Ticks lo = std::max(as[i].onset, bs[j].onset);
    const Ticks hi = std::min(as[i].offset, bs[j].offset);
    if (lo < hi) out.push_back({lo, hi});
    if (as[i].offset < bs[j].offset) {
      ++i;
    } else {
      ++j;
    }
  }
  return Timeline(std::move(out));
}

Timeline Union(const Timeline &a, const Timeline &b) {
  std::vector<Interval> all;
  all.reserve(a.intervals().size() + b.intervals().size());
  all.insert(all.end(), a.intervals().begin(), a.intervals().end());
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return Timeline::Normalize(std::move(all));
}

Timeline Subtract(const Timeline &a, const Timeline &b) {
  std::vector<Interval> out;
  const auto &bs = b.intervals();
  std::size_t j = 0;
  for (const Interval &ia : a.intervals()) {
    // Skip cuts that end before this interval; they cannot touch later ones
    // either since a is sorted.
    while (j < bs.size() && bs[j].offset <= ia.onset) ++j;
    Ticks cursor = ia.onset;
    for (std::size_t k = j; k < bs.size() && bs[k].onset < ia.offset; ++k) {
      if (bs[k].onset > cursor) out.push_back({cursor, bs[k].onset});
      cursor = std::max(cursor, bs[k].offset);
    }
    if (cursor < ia.offset) out.push_back({cursor, ia.offset});
  }
  return Timeline(std::move(out));
}

}  // namespace diarscore
