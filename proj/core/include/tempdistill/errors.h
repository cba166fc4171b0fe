// Copyright 2026 The tempdistill Authors.
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

#ifndef TEMPDISTILL_ERRORS_H_
#define TEMPDISTILL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tempdistill {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input record. The message names the line and field.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string &message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed record that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Syntactic extraction failures. These are expected on real text and are
// counted by the pipeline rather than propagated.
class TreeMissing : public Error {
 public:
  TreeMissing() : Error("sentence has no constituency tree") {}
};

class NoVerbFound : public Error {
 public:
  NoVerbFound() : Error("no verb leaf under node") {}
};

class NoParentVP : public Error {
 public:
  NoParentVP() : Error("no parent verb phrase for connective") {}
};

class NoChildVP : public Error {
 public:
  NoChildVP() : Error("no child verb phrase for connective") {}
};

// An event token falls inside a span that must be masked.
class EventMasked : public Error {
 public:
  EventMasked() : Error("event token lies inside a cue span") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class TrainingDiverged : public Error {
 public:
  explicit TrainingDiverged(int epoch)
      : Error("loss became non-finite at epoch " + std::to_string(epoch)),
        epoch_(epoch) {}
  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

}  // namespace tempdistill

#endif  // TEMPDISTILL_ERRORS_H_
