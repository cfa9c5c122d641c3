// include/diarscore/metrics.h

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

#ifndef DIARSCORE_METRICS_H_
#define DIARSCORE_METRICS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diarscore/formats.h"
#include "diarscore/ticks.h"
#include "diarscore/timeline.h"

namespace diarscore {

// One timeline per speaker name.  Speakers whose clipped timeline is empty
// stay in the map: they still count for JER averaging.
using SpeakerTimelines = std::map<std::string, Timeline>;

// Groups turns by speaker and merges each speaker's intervals (self-
// overlapping turns of one speaker collapse here).
SpeakerTimelines BuildSpeakerTimelines(const std::vector<Turn> &turns);

// Clips every speaker to the scoring regions, keeping empty speakers.
SpeakerTimelines ClipSpeakers(const SpeakerTimelines &speakers,
                              const Timeline &regions);

// Pairwise overlap durations between reference and system speakers.
// Entry (i, j) is |ref_i ∩ sys_j| in ticks.
struct OverlapMatrix {
  std::vector<std::string> ref_names;  // sorted
  std::vector<std::string> sys_names;  // sorted
  std::vector<std::vector<Ticks>> overlap;
};

OverlapMatrix BuildOverlapMatrix(const SpeakerTimelines &ref,
                                 const SpeakerTimelines &sys);

// One-to-one partial pairing of reference and system speakers.  Pairs with
// zero overlap are dropped, so an unmatched speaker is simply absent.
struct SpeakerMapping {
  std::vector<std::pair<std::string, std::string>> pairs;  // sorted by ref
  Ticks objective = 0;  // total matched overlap, maximal over all pairings

  const std::string *SysFor(const std::string &ref_speaker) const;
};

// Maximum-weight one-to-one assignment over the overlap matrix, computed
// with the Hungarian algorithm.  When several pairings reach the same
// objective the lexicographically smallest pair list (by ref name, then sys
// name) is returned, so results are deterministic.
SpeakerMapping OptimalMapping(const OverlapMatrix &m);

// Diarization error rate components, all in ticks of scored speaker time.
// TOTAL counts overlapped reference time once per active speaker, so the
// rate can exceed 100%.
struct DerComponents {
  Ticks fa = 0;
  Ticks miss = 0;
  Ticks error = 0;
  Ticks total = 0;

  double Percent() const {
    return 100.0 * static_cast<double>(fa + miss + error) /
           static_cast<double>(total);
  }
};

// Scores a file by decomposing scored time into maximal spans with a
// constant set of active speakers.  For a span of length d with n_ref
// active reference speakers, n_sys active system speakers and n_correct
// mapped pairs both active:
//   MISS  += d * max(0, n_ref - n_sys)
//   FA    += d * max(0, n_sys - n_ref)
//   ERROR += d * (min(n_ref, n_sys) - n_correct)
//   TOTAL += d * n_ref
// No collar is applied and overlapped speech is fully evaluated.
// Throws EmptyReference when TOTAL is zero.
DerComponents ComputeDer(const SpeakerTimelines &ref,
                         const SpeakerTimelines &sys,
                         const SpeakerMapping &mapping);

// Jaccard error rate for one reference speaker.  For a mapped pair (r, s):
// TOTAL = |r ∪ s|, FA = |s - r|, MISS = |r - s|.  An unmapped reference
// speaker scores 100 (FA = 0, MISS = TOTAL = |r|); unmapped system speakers
// contribute nothing.
struct SpeakerJer {
  std::string ref_speaker;
  std::string sys_speaker;  // empty when unmapped
  bool mapped = false;
  Ticks fa = 0;
  Ticks miss = 0;
  Ticks total = 0;
  // Reference speaker with no time inside the scoring regions: the 0/0 case
  // is pinned to 0 so speech outside scored regions cannot inflate error.
  bool zero_scored = false;
  double jer_pct = 0.0;
};

struct JerComponents {
  std::vector<SpeakerJer> speakers;  // sorted by ref name

  // Plain mean over reference speakers: every speaker weighs the same.
  double Percent() const;
};

// Throws EmptyReference when there are no reference speakers.
JerComponents ComputeJer(const SpeakerTimelines &ref,
                         const SpeakerTimelines &sys,
                         const SpeakerMapping &mapping);

struct FileScore {
  std::string file_id;
  DerComponents der;
  JerComponents jer;
  int ref_speaker_count = 0;
  int sys_speaker_count = 0;
};

// Full per-file pipeline: speaker timelines, optional region clipping,
// optional collar excision, one optimal mapping reused for DER and JER.
// regions == nullptr scores the whole recording.  A non-zero collar
// removes [b - collar, b + collar] around every reference turn boundary
// from scoring.
FileScore ScoreFile(const std::vector<Turn> &ref_turns,
                    const std::vector<Turn> &sys_turns,
                    const Timeline *regions, const std::string &file_id,
                    Ticks collar = 0);

// Corpus-level aggregates.  DER pools components across files; JER stays a
// per-speaker mean, extended over all reference speakers of all files.
struct AggregateScore {
  Ticks fa = 0;
  Ticks miss = 0;
  Ticks error = 0;
  Ticks total = 0;
  double jer_sum = 0.0;
  int jer_count = 0;
  int ref_speakers = 0;
  int sys_speakers = 0;

  double DerPercent() const {
    return 100.0 * static_cast<double>(fa + miss + error) /
           static_cast<double>(total);
  }
  double JerPercent() const { return jer_sum / jer_count; }
};

struct CorpusScores {
  std::vector<FileScore> files;  // sorted by file id
  AggregateScore overall;
  // Present when a core subset was given: the same aggregates restricted to
  // core files.
  std::optional<AggregateScore> core_overall;
  std::vector<Diagnostic> warnings;
};

struct CorpusOptions {
  const ScoringRegions *regions = nullptr;
  // Challenge mode: every scored file must have a UEM entry.  In research
  // mode files without an entry are scored whole, with a warning.
  bool require_regions = false;
  Ticks collar = 0;
  const std::set<std::string> *core_files = nullptr;
  int jobs = 1;
};

// Scores every reference file against its system counterpart, paired by
// file id.  Files are scored independently (in parallel when jobs > 1) and
// reduced in file-id order, so output is deterministic.  Throws MissingFile
// when the reference and system file sets differ and MissingRegions when
// require_regions is set but a file has no UEM entry.
CorpusScores ScoreCorpus(const std::map<std::string, std::vector<Turn>> &ref,
                         const std::map<std::string, std::vector<Turn>> &sys,
                         const CorpusOptions &options);

// Speech activity segments: the union of all speaker timelines with speaker
// identity removed, with consecutive segments closer than max_gap fused.
std::vector<SadSegment> DeriveSad(const std::vector<Turn> &turns,
                                  Ticks max_gap = 0);

}  // namespace diarscore

#endif  // DIARSCORE_METRICS_H_
