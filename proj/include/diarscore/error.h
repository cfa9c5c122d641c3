// include/diarscore/error.h

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

#ifndef DIARSCORE_ERROR_H_
#define DIARSCORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace diarscore {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// An interval with offset <= onset was passed where a real extent is required.
class DegenerateInterval : public Error {
 public:
  using Error::Error;
};

// bridge_gaps called with a negative maximum gap.
class NegativeGap : public Error {
 public:
  using Error::Error;
};

// A writer was handed a value that violates its format invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// DER/JER are undefined when there is no scored reference speech.
class EmptyReference : public Error {
 public:
  using Error::Error;
};

// Reference and system file sets do not line up.
class MissingFile : public Error {
 public:
  using Error::Error;
};

// Strict scoring requires a UEM entry for every scored file.
class MissingRegions : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (unreadable input, unwritable output).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace diarscore

#endif  // DIARSCORE_ERROR_H_
