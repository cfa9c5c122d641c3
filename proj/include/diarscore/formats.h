// include/diarscore/formats.h

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

#ifndef DIARSCORE_FORMATS_H_
#define DIARSCORE_FORMATS_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "diarscore/error.h"
#include "diarscore/ticks.h"
#include "diarscore/timeline.h"

namespace diarscore {

// One speaker turn, i.e. one RTTM record.  The type tag is always SPEAKER
// and the orthography / speaker-type / confidence / lookahead columns are
// always the literal token "<NA>", so only the meaningful fields are stored.
struct Turn {
  std::string file_id;
  int channel = 1;
  Ticks onset = 0;
  Ticks duration = 0;
  std::string speaker;

  Ticks Offset() const { return onset + duration; }
  bool operator==(const Turn &) const = default;
};

// Per-file scoring regions from a UEM file.  Regions of one file are kept in
// onset order and pairwise disjoint; gaps between them are excised from
// scoring (PII holes).
struct ScoringRegions {
  struct FileRegions {
    int channel = 1;
    std::vector<Interval> regions;
  };

  std::map<std::string, FileRegions> files;

  const FileRegions *Find(const std::string &file_id) const {
    auto it = files.find(file_id);
    return it == files.end() ? nullptr : &it->second;
  }

  // Merged region timeline for one file; empty if the file has no entry.
  Timeline RegionTimeline(const std::string &file_id) const;
};

// One speech segment of an HTK label file; the label is always "speech".
struct SadSegment {
  Ticks onset = 0;
  Ticks offset = 0;
  bool operator==(const SadSegment &) const = default;
};

enum class Severity { kWarning, kError };

// One positioned finding from a parser or the submission validator.
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;  // "FieldCount", "BadNumber", "BadTag", ...
  std::string file;  // file_id, or input path when no file_id is known
  int line = 0;      // 1-based; 0 means the finding concerns the whole file
  std::string message;
};

// "error f1:3 [FieldCount] expected 10 fields, got 9"
std::string FormatDiagnostic(const Diagnostic &d);

bool HasErrors(const std::vector<Diagnostic> &diagnostics);

// Strict mode enforces every format rule; lenient mode downgrades tag,
// channel and placeholder deviations to warnings so research RTTMs from
// other toolchains can still be scored.  Validation always runs strict.
enum class ParseMode { kStrict, kLenient };

struct RttmParseResult {
  std::vector<Turn> turns;
  std::vector<Diagnostic> diagnostics;
  bool Ok() const { return !HasErrors(diagnostics); }
};

// Reads RTTM records, one per non-empty line; ";;" comment lines are
// skipped.  Every malformed line yields a diagnostic naming the line and
// never aborts the scan, so one pass reports all findings.
RttmParseResult ParseRttm(std::istream &in, ParseMode mode = ParseMode::kStrict);

// Serializes turns in input order, single-space delimited, times with four
// decimals.  Throws InvariantViolation on any turn that would not re-parse.
std::string WriteRttm(const std::vector<Turn> &turns);

struct UemParseResult {
  ScoringRegions regions;
  std::vector<Diagnostic> diagnostics;
  bool Ok() const { return !HasErrors(diagnostics); }
};

UemParseResult ParseUem(std::istream &in);

// Lines sorted by file id then onset.  Throws InvariantViolation.
std::string WriteUem(const ScoringRegions &regions);

struct LabParseResult {
  std::vector<SadSegment> segments;
  std::vector<Diagnostic> diagnostics;
  bool Ok() const { return !HasErrors(diagnostics); }
};

// Three fields per line: onset, offset, the literal label "speech".
// Segments must be pairwise disjoint.
LabParseResult ParseHtkLab(std::istream &in);

// Serializes segments sorted by onset.  Throws InvariantViolation.
std::string WriteHtkLab(std::vector<SadSegment> segments);

}  // namespace diarscore

#endif  // DIARSCORE_FORMATS_H_
