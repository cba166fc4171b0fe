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

#include "tempdistill/example.h"

#include <fstream>

#include "jsonl.h"
#include "tempdistill/errors.h"
#include "tempdistill/util.h"

namespace tempdistill {

using internal::FieldReader;
using internal::Json;
using internal::OrderedJson;

std::string_view HeuristicName(Heuristic heuristic) {
  switch (heuristic) {
    case Heuristic::kBeforeAfter: return "BEFOREAFTER";
    case Heuristic::kDistantTimex: return "DISTANTTIMEX";
    case Heuristic::kGold: return "GOLD";
  }
  return "GOLD";
}

std::optional<Heuristic> ParseHeuristic(std::string_view name) {
  std::string lower = ToLower(name);
  std::erase(lower, '_');
  std::erase(lower, '-');
  if (lower == "beforeafter") return Heuristic::kBeforeAfter;
  if (lower == "distanttimex") return Heuristic::kDistantTimex;
  if (lower == "gold") return Heuristic::kGold;
  return std::nullopt;
}

std::string_view CueKindName(CueKind kind) {
  return kind == CueKind::kTimex ? "timex" : "connective";
}

std::optional<CueKind> ParseCueKind(std::string_view name) {
  if (name == "timex") return CueKind::kTimex;
  if (name == "connective") return CueKind::kConnective;
  return std::nullopt;
}

std::vector<std::string> ValidateExample(const LabeledExample &example) {
  std::vector<std::string> out;
  const int n = static_cast<int>(example.tokens.size());
  if (example.id.empty()) out.push_back("id is empty");
  if (example.doc_id.empty()) out.push_back("doc_id is empty");
  if (n == 0) out.push_back("no tokens");
  if (example.e1 < 0 || example.e1 >= n) out.push_back("e1 out of range");
  if (example.e2 < 0 || example.e2 >= n) out.push_back("e2 out of range");
  if (example.e1 == example.e2) out.push_back("e1 equals e2");
  if (example.heuristic != Heuristic::kGold && example.label == Label::kVague) {
    out.push_back("weak labels are never VAGUE");
  }
  if (example.heuristic == Heuristic::kBeforeAfter && example.label == Label::kEqual) {
    out.push_back("BEFOREAFTER labels are never EQUAL");
  }
  if (example.masked_tokens && static_cast<int>(example.masked_tokens->size()) != n) {
    out.push_back("masked_tokens length differs from tokens");
  }
  for (size_t i = 0; i < example.cue_spans.size(); ++i) {
    const CueSpan &span = example.cue_spans[i];
    const std::string where = "cue_spans[" + std::to_string(i) + "]: ";
    if (span.start < 0 || span.end > n || span.start >= span.end) {
      out.push_back(where + "bad range");
    } else if ((example.e1 >= span.start && example.e1 < span.end) ||
               (example.e2 >= span.start && example.e2 < span.end)) {
      out.push_back(where + "covers an event");
    }
  }
  return out;
}

namespace {

std::vector<std::string> StringArray(const FieldReader &r, const char *name) {
  std::vector<std::string> out;
  const Json &array = r.Array(name);
  for (const Json &v : array) {
    if (!v.is_string()) r.Fail(name, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

LabeledExample ParseExampleLine(std::string_view line, int line_number) {
  const Json record = internal::ParseJsonLine(line, line_number);
  FieldReader r(record, line_number);
  LabeledExample ex;
  ex.id = r.String("id");
  const auto heuristic = ParseHeuristic(r.String("heuristic"));
  if (!heuristic) r.Fail("heuristic", "unknown heuristic");
  ex.heuristic = *heuristic;
  ex.doc_id = r.String("doc_id");
  ex.source = r.String("source");
  ex.tokens = StringArray(r, "tokens");
  ex.e1 = r.Int("e1");
  ex.e2 = r.Int("e2");
  const auto label = ParseLabel(r.String("label"));
  if (!label) r.Fail("label", "unknown label");
  ex.label = *label;
  if (r.Has("masked_tokens") && !r.Get("masked_tokens").is_null()) {
    ex.masked_tokens = StringArray(r, "masked_tokens");
  }
  if (r.Has("cue_spans")) {
    const Json &spans = r.Array("cue_spans");
    for (size_t i = 0; i < spans.size(); ++i) {
      FieldReader sr(spans[i], line_number, "cue_spans[" + std::to_string(i) + "]");
      CueSpan span;
      span.start = sr.Int("start");
      span.end = sr.Int("end");
      const auto kind = ParseCueKind(sr.String("kind"));
      if (!kind) sr.Fail("kind", "expected 'timex' or 'connective'");
      span.kind = *kind;
      ex.cue_spans.push_back(span);
    }
  }
  const std::vector<std::string> violations = ValidateExample(ex);
  if (!violations.empty()) {
    throw ParseError(line_number, "invalid example '" + ex.id + "': " + violations.front());
  }
  return ex;
}

std::string ExampleToLine(const LabeledExample &example) {
  OrderedJson record;
  record["id"] = example.id;
  record["heuristic"] = HeuristicName(example.heuristic);
  record["doc_id"] = example.doc_id;
  record["source"] = example.source;
  record["tokens"] = example.tokens;
  record["e1"] = example.e1;
  record["e2"] = example.e2;
  record["label"] = LabelName(example.label);
  record["masked_tokens"] =
      example.masked_tokens ? OrderedJson(*example.masked_tokens) : OrderedJson(nullptr);
  OrderedJson spans = OrderedJson::array();
  for (const CueSpan &span : example.cue_spans) {
    OrderedJson s;
    s["start"] = span.start;
    s["end"] = span.end;
    s["kind"] = CueKindName(span.kind);
    spans.push_back(std::move(s));
  }
  record["cue_spans"] = std::move(spans);
  return record.dump();
}

std::vector<LabeledExample> ReadExamples(std::istream &in) {
  std::vector<LabeledExample> examples;
  internal::ForEachRecordLine(in, [&](std::string_view line, int number) {
    examples.push_back(ParseExampleLine(line, number));
  });
  return examples;
}

std::vector<LabeledExample> ReadExamples(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadExamples(in);
}

void WriteExamples(std::ostream &out, const std::vector<LabeledExample> &examples) {
  for (const LabeledExample &example : examples) out << ExampleToLine(example) << '\n';
}

}  // namespace tempdistill
