// include/diarscore/timeline.h

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

#ifndef DIARSCORE_TIMELINE_H_
#define DIARSCORE_TIMELINE_H_

#include <vector>

#include "diarscore/error.h"
#include "diarscore/ticks.h"

namespace diarscore {

// Half-open extent [onset, offset) on one recording.  Adjacent intervals
// share no time, so "touching" never double-counts.
struct Interval {
  Ticks onset = 0;
  Ticks offset = 0;

  Ticks Length() const { return offset - onset; }
  bool operator==(const Interval &) const = default;
};

// Canonical set of intervals: sorted ascending by onset, pairwise disjoint
// and non-adjacent.  Values are immutable after construction and every
// operation returns a new canonical Timeline, so instances can be shared
// freely across threads.
class Timeline {
 public:
  Timeline() = default;

  // Canonicalizes arbitrary input: sorts by onset and merges any overlapping
  // or touching intervals.  Throws DegenerateInterval if any input has
  // offset <= onset.
  static Timeline Normalize(std::vector<Interval> raw);

  const std::vector<Interval> &intervals() const { return intervals_; }
  bool Empty() const { return intervals_.empty(); }
  Ticks Duration() const;

  // Fuses consecutive intervals separated by a gap <= max_gap.  Idempotent;
  // max_gap of zero is the identity.  Throws NegativeGap if max_gap < 0.
  Timeline BridgeGaps(Ticks max_gap) const;

  bool operator==(const Timeline &) const = default;

 private:
  friend Timeline Intersect(const Timeline &a, const Timeline &b);
  friend Timeline Union(const Timeline &a, const Timeline &b);
  friend Timeline Subtract(const Timeline &a, const Timeline &b);

  // Trusts the input to already be canonical.
  explicit Timeline(std::vector<Interval> canonical)
      : intervals_(std::move(canonical)) {}

  std::vector<Interval> intervals_;
};

// Time present in both a and b.
Timeline Intersect(const Timeline &a, const Timeline &b);

// Time present in either a or b.  |a ∪ b| = |a| + |b| - |a ∩ b| exactly.
Timeline Union(const Timeline &a, const Timeline &b);

// Time present in a but not b.  |a - b| = |a| - |a ∩ b| exactly.
Timeline Subtract(const Timeline &a, const Timeline &b);

// Restricts a to the given scoring regions: anything outside vanishes,
// straddling intervals are truncated at region edges.
inline Timeline Clip(const Timeline &a, const Timeline &regions) {
  return Intersect(a, regions);
}

}  // namespace diarscore

#endif  // DIARSCORE_TIMELINE_H_
