// src/formats.cc

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

#include "diarscore/formats.h"

#include <algorithm>
#include <istream>
#include <sstream>
#include <utility>

namespace diarscore {

namespace {

constexpr const char *kNa = "<NA>";

// Any run of spaces or tabs delimits fields; a trailing '\r' from CRLF input
// is dropped.
std::vector<std::string> SplitFields(const std::string &line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  const std::size_t end =
      !line.empty() && line.back() == '\r' ? line.size() - 1 : line.size();
  while (i < end) {
    while (i < end && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < end && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.emplace_back(line.substr(start, i - start));
  }
  return fields;
}

bool IsComment(const std::vector<std::string> &fields) {
  return !fields.empty() && fields[0].rfind(";;", 0) == 0;
}

// Channel IDs are small positive integers.
std::optional<int> ParseChannel(const std::string &text) {
  if (text.empty() || text.size() > 6) return std::nullopt;
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

bool IsToken(const std::string &text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

void Add(std::vector<Diagnostic> &out, Severity severity, std::string code,
         int line, std::string message) {
  out.push_back({severity, std::move(code), "", line, std::move(message)});
}

}  // namespace

Timeline ScoringRegions::RegionTimeline(const std::string &file_id) const {
  const FileRegions *fr = Find(file_id);
  if (fr == nullptr) return Timeline();
  return Timeline::Normalize(fr->regions);
}

std::string FormatDiagnostic(const Diagnostic &d) {
  std::string out = d.severity == Severity::kError ? "error" : "warning";
  if (!d.file.empty()) {
    out += " " + d.file;
    if (d.line > 0) out += ":" + std::to_string(d.line);
  } else if (d.line > 0) {
    out += " line " + std::to_string(d.line);
  }
  out += " [" + d.code + "] " + d.message;
  return out;
}

bool HasErrors(const std::vector<Diagnostic> &diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &d) {
                       return d.severity == Severity::kError;
                     });
}

RttmParseResult ParseRttm(std::istream &in, ParseMode mode) {
  RttmParseResult result;
  const Severity deviation =
      mode == ParseMode::kStrict ? Severity::kError : Severity::kWarning;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> fields = SplitFields(line);
    if (fields.empty() || IsComment(fields)) continue;

    if (fields.size() != 10) {
      Add(result.diagnostics, Severity::kError, "FieldCount", line_no,
          "expected 10 fields, got " + std::to_string(fields.size()));
      continue;
    }

    std::vector<Diagnostic> findings;
    if (fields[0] != "SPEAKER") {
      Add(findings, deviation, "BadTag", line_no,
          "type must be SPEAKER, got '" + fields[0] + "'");
      if (mode == ParseMode::kLenient) {
        // Non-speaker records carry no diarization content; skip them.
        result.diagnostics.insert(result.diagnostics.end(), findings.begin(),
                                  findings.end());
        continue;
      }
    }

    Turn turn;
    turn.file_id = fields[1];

    const std::optional<int> channel = ParseChannel(fields[2]);
    if (!channel) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "channel (field 3) is not a positive integer: '" + fields[2] + "'");
    } else {
      turn.channel = *channel;
      if (*channel != 1) {
        Add(findings, deviation, "BadTag", line_no,
            "channel must be 1, got " + fields[2]);
      }
    }

    const std::optional<Ticks> onset = ParseSeconds(fields[3]);
    if (!onset) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "onset (field 4) is not a number: '" + fields[3] + "'");
    } else if (*onset < 0) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "onset (field 4) must be non-negative");
    } else {
      turn.onset = *onset;
    }

    const std::optional<Ticks> duration = ParseSeconds(fields[4]);
    if (!duration) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "duration (field 5) is not a number: '" + fields[4] + "'");
    } else if (*duration <= 0) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "duration (field 5) must be positive");
    } else {
      turn.duration = *duration;
    }

    static constexpr int kNaFields[] = {5, 6, 8, 9};
    for (int idx : kNaFields) {
      if (fields[idx] != kNa) {
        Add(findings, deviation, "BadTag", line_no,
            "field " + std::to_string(idx + 1) + " must be <NA>, got '" +
                fields[idx] + "'");
      }
    }

    turn.speaker = fields[7];

    for (Diagnostic &d : findings) d.file = turn.file_id;
    const bool broken = HasErrors(findings);
    result.diagnostics.insert(result.diagnostics.end(), findings.begin(),
                              findings.end());
    if (!broken) result.turns.push_back(std::move(turn));
  }
  return result;
}

std::string WriteRttm(const std::vector<Turn> &turns) {
  std::string out;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    const Turn &t = turns[i];
    const std::string label = "turn " + std::to_string(i + 1) + " (file '" +
                              t.file_id + "', speaker '" + t.speaker + "')";
    if (!IsToken(t.file_id) || !IsToken(t.speaker)) {
      throw InvariantViolation(label + ": file id and speaker must be "
                                       "non-empty whitespace-free tokens");
    }
    if (t.channel != 1) {
      throw InvariantViolation(label + ": channel must be 1");
    }
    if (t.onset < 0) {
      throw InvariantViolation(label + ": onset must be non-negative");
    }
    if (t.duration <= 0) {
      throw InvariantViolation(label + ": duration must be positive");
    }
    out += "SPEAKER " + t.file_id + " 1 " + FormatSeconds(t.onset) + " " +
           FormatSeconds(t.duration) + " <NA> <NA> " + t.speaker +
           " <NA> <NA>\n";
  }
  return out;
}

UemParseResult ParseUem(std::istream &in) {
  UemParseResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> fields = SplitFields(line);
    if (fields.empty() || IsComment(fields)) continue;

    if (fields.size() != 4) {
      Add(result.diagnostics, Severity::kError, "FieldCount", line_no,
          "expected 4 fields, got " + std::to_string(fields.size()));
      continue;
    }

    const std::string &file_id = fields[0];
    std::vector<Diagnostic> findings;

    const std::optional<int> channel = ParseChannel(fields[1]);
    if (!channel || *channel < 1) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "channel (field 2) must be a 1-indexed integer: '" + fields[1] +
              "'");
    }
    const std::optional<Ticks> onset = ParseSeconds(fields[2]);
    if (!onset || *onset < 0) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "onset (field 3) must be a non-negative number: '" + fields[2] +
              "'");
    }
    const std::optional<Ticks> offset = ParseSeconds(fields[3]);
    if (!offset) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "offset (field 4) is not a number: '" + fields[3] + "'");
    } else if (onset && *offset <= *onset) {
      Add(findings, Severity::kError, "BadNumber", line_no,
          "offset (field 4) must exceed onset");
    }

    for (Diagnostic &d : findings) d.file = file_id;
    const bool broken = HasErrors(findings);
    result.diagnostics.insert(result.diagnostics.end(), findings.begin(),
                              findings.end());
    if (broken) continue;

    auto [it, inserted] = result.regions.files.try_emplace(file_id);
    if (inserted) {
      it->second.channel = *channel;
    } else if (it->second.channel != *channel) {
      result.diagnostics.push_back({Severity::kWarning, "ChannelMismatch",
                                    file_id, line_no,
                                    "channel differs from an earlier region "
                                    "of the same file"});
    }
    it->second.regions.push_back({*onset, *offset});
  }

  for (auto &[file_id, fr] : result.regions.files) {
    std::sort(fr.regions.begin(), fr.regions.end(),
              [](const Interval &a, const Interval &b) {
                return a.onset < b.onset;
              });
    for (std::size_t i = 1; i < fr.regions.size(); ++i) {
      if (fr.regions[i].onset < fr.regions[i - 1].offset) {
        result.diagnostics.push_back(
            {Severity::kError, "OverlappingRegions", file_id, 0,
             "regions [" + FormatSeconds(fr.regions[i - 1].onset) + ", " +
                 FormatSeconds(fr.regions[i - 1].offset) + ") and [" +
                 FormatSeconds(fr.regions[i].onset) + ", " +
                 FormatSeconds(fr.regions[i].offset) + ") overlap"});
        break;
      }
    }
  }
  return result;
}

std::string WriteUem(const ScoringRegions &regions) {
  std::string out;
  for (const auto &[file_id, fr] : regions.files) {
    if (!IsToken(file_id)) {
      throw InvariantViolation("file id must be a non-empty whitespace-free "
                               "token");
    }
    if (fr.channel < 1) {
      throw InvariantViolation("file '" + file_id +
                               "': channel must be 1-indexed");
    }
    std::vector<Interval> sorted = fr.regions;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval &a, const Interval &b) {
                return a.onset < b.onset;
              });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].offset <= sorted[i].onset) {
        throw InvariantViolation("file '" + file_id +
                                 "': region offset must exceed onset");
      }
      if (i > 0 && sorted[i].onset < sorted[i - 1].offset) {
        throw InvariantViolation("file '" + file_id +
                                 "': regions must be disjoint");
      }
      out += file_id + " " + std::to_string(fr.channel) + " " +
             FormatSeconds(sorted[i].onset) + " " +
             FormatSeconds(sorted[i].offset) + "\n";
    }
  }
  return out;
}

LabParseResult ParseHtkLab(std::istream &in) {
  LabParseResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> fields = SplitFields(line);
    if (fields.empty() || IsComment(fields)) continue;

    if (fields.size() != 3) {
      Add(result.diagnostics, Severity::kError, "FieldCount", line_no,
          "expected 3 fields, got " + std::to_string(fields.size()));
      continue;
    }

    bool broken = false;
    const std::optional<Ticks> onset = ParseSeconds(fields[0]);
    if (!onset || *onset < 0) {
      Add(result.diagnostics, Severity::kError, "BadNumber", line_no,
          "onset (field 1) must be a non-negative number: '" + fields[0] +
              "'");
      broken = true;
    }
    const std::optional<Ticks> offset = ParseSeconds(fields[1]);
    if (!offset) {
      Add(result.diagnostics, Severity::kError, "BadNumber", line_no,
          "offset (field 2) is not a number: '" + fields[1] + "'");
      broken = true;
    } else if (onset && *offset <= *onset) {
      Add(result.diagnostics, Severity::kError, "BadNumber", line_no,
          "offset (field 2) must exceed onset");
      broken = true;
    }
    if (fields[2] != "speech") {
      Add(result.diagnostics, Severity::kError, "BadLabel", line_no,
          "label must be 'speech', got '" + fields[2] + "'");
      broken = true;
    }
    if (!broken) result.segments.push_back({*onset, *offset});
  }

  std::sort(result.segments.begin(), result.segments.end(),
            [](const SadSegment &a, const SadSegment &b) {
              return a.onset < b.onset;
            });
  for (std::size_t i = 1; i < result.segments.size(); ++i) {
    if (result.segments[i].onset < result.segments[i - 1].offset) {
      Add(result.diagnostics, Severity::kError, "OverlapViolation", 0,
          "segments [" + FormatSeconds(result.segments[i - 1].onset) + ", " +
              FormatSeconds(result.segments[i - 1].offset) + ") and [" +
              FormatSeconds(result.segments[i].onset) + ", " +
              FormatSeconds(result.segments[i].offset) + ") overlap");
      break;
    }
  }
  return result;
}

std::string WriteHtkLab(std::vector<SadSegment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const SadSegment &a, const SadSegment &b) {
              return a.onset < b.onset;
            });
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].onset < 0 || segments[i].offset <= segments[i].onset) {
      throw InvariantViolation("segment " + std::to_string(i + 1) +
                               ": offset must exceed non-negative onset");
    }
    if (i > 0 && segments[i].onset < segments[i - 1].offset) {
      throw InvariantViolation("segments must be disjoint");
    }
    out += FormatSeconds(segments[i].onset) + " " +
           FormatSeconds(segments[i].offset) + " speech\n";
  }
  return out;
}

}  // namespace diarscore
