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

#ifndef TEMPDISTILL_EXAMPLE_H_
#define TEMPDISTILL_EXAMPLE_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempdistill/labels.h"

namespace tempdistill {

enum class Heuristic { kBeforeAfter, kDistantTimex, kGold };
enum class CueKind { kTimex, kConnective };

std::string_view HeuristicName(Heuristic heuristic);  // "BEFOREAFTER", ...
std::optional<Heuristic> ParseHeuristic(std::string_view name);
std::string_view CueKindName(CueKind kind);
std::optional<CueKind> ParseCueKind(std::string_view name);

// Token range [start, end) of an explicit temporal cue.
struct CueSpan {
  int start = 0;
  int end = 0;
  CueKind kind = CueKind::kTimex;

  friend bool operator==(const CueSpan &, const CueSpan &) = default;
};

// An event pair in a one- or two-sentence context.
struct LabeledExample {
  std::string id;
  Heuristic heuristic = Heuristic::kDistantTimex;
  std::string doc_id;
  std::string source;
  std::vector<std::string> tokens;
  int e1 = 0;
  int e2 = 0;
  Label label = Label::kBefore;
  std::optional<std::vector<std::string>> masked_tokens;
  std::vector<CueSpan> cue_spans;

  // masked_tokens when present, else tokens.
  const std::vector<std::string> &visible_tokens() const {
    return masked_tokens ? *masked_tokens : tokens;
  }

  friend bool operator==(const LabeledExample &, const LabeledExample &) = default;
};

std::vector<std::string> ValidateExample(const LabeledExample &example);

// Line-delimited interchange with fields id, heuristic, doc_id, source,
// tokens, e1, e2, label, masked_tokens, cue_spans. A leading manifest header
// line is skipped on read.
LabeledExample ParseExampleLine(std::string_view line, int line_number);
std::string ExampleToLine(const LabeledExample &example);
std::vector<LabeledExample> ReadExamples(std::istream &in);
std::vector<LabeledExample> ReadExamples(const std::filesystem::path &path);
void WriteExamples(std::ostream &out, const std::vector<LabeledExample> &examples);

}  // namespace tempdistill

#endif  // TEMPDISTILL_EXAMPLE_H_
