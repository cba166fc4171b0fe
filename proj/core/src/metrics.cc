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

#include "tempdistill/metrics.h"

#include <cstdio>
#include <fstream>

#include "jsonl.h"
#include "tempdistill/errors.h"

namespace tempdistill {

using internal::FieldReader;
using internal::Json;
using internal::OrderedJson;

double F1Score(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

EvalReport Evaluate(const std::vector<Label> &predictions, const std::vector<Label> &golds) {
  if (predictions.empty()) throw Error("nothing to evaluate");
  if (predictions.size() != golds.size()) {
    throw Error("got " + std::to_string(predictions.size()) + " predictions for " +
                std::to_string(golds.size()) + " gold labels");
  }
  int correct_nonvague = 0;
  int predicted_nonvague = 0;
  int gold_nonvague = 0;
  int correct = 0;
  for (size_t i = 0; i < golds.size(); ++i) {
    const bool match = predictions[i] == golds[i];
    if (match) ++correct;
    if (predictions[i] != Label::kVague) {
      ++predicted_nonvague;
      if (match) ++correct_nonvague;
    }
    if (golds[i] != Label::kVague) ++gold_nonvague;
  }
  EvalReport report;
  report.n = static_cast<int>(golds.size());
  report.precision_undefined = predicted_nonvague == 0;
  if (predicted_nonvague > 0) report.precision = 100.0 * correct_nonvague / predicted_nonvague;
  if (gold_nonvague > 0) {
    report.recall = 100.0 * correct_nonvague / gold_nonvague;
    report.nonvague_accuracy = report.recall;
  }
  report.f1 = F1Score(report.precision, report.recall);
  report.accuracy = 100.0 * correct / report.n;
  return report;
}

Label MajorityLabel(const std::vector<Label> &labels) {
  if (labels.empty()) throw Error("majority label of an empty set");
  std::array<int, kNumLabels> counts{};
  for (Label l : labels) ++counts[LabelIndex(l)];
  int best = 0;
  for (int l = 1; l < kNumLabels; ++l) {
    if (counts[l] > counts[best]) best = l;
  }
  return LabelAt(best);
}

EvalReport MajorityBaseline(const std::vector<Label> &train_labels,
                            const std::vector<Label> &golds) {
  const Label majority = MajorityLabel(train_labels);
  return Evaluate(std::vector<Label>(golds.size(), majority), golds);
}

std::vector<PredictionRecord> Ensemble(
    const std::vector<std::vector<PredictionRecord>> &per_head) {
  if (per_head.empty()) throw Error("ensemble of zero heads");
  const size_t n = per_head.front().size();
  for (const auto &head : per_head) {
    if (head.size() != n) throw Error("heads predicted different numbers of examples");
  }
  std::vector<PredictionRecord> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::array<int, kNumLabels> votes{};
    std::array<double, kNumLabels> prob_sum{};
    const std::string &id = per_head.front()[i].example_id;
    for (const auto &head : per_head) {
      if (head[i].example_id != id) {
        throw Error("example ids differ at position " + std::to_string(i) + ": '" + id +
                    "' vs '" + head[i].example_id + "'");
      }
      ++votes[LabelIndex(head[i].label)];
      for (int l = 0; l < kNumLabels; ++l) prob_sum[l] += head[i].probs[l];
    }
    int best = 0;
    for (int l = 1; l < kNumLabels; ++l) {
      if (votes[l] > votes[best] || (votes[l] == votes[best] && prob_sum[l] > prob_sum[best])) {
        best = l;
      }
    }
    PredictionRecord record;
    record.example_id = id;
    record.label = LabelAt(best);
    for (int l = 0; l < kNumLabels; ++l) {
      record.probs[l] = prob_sum[l] / static_cast<double>(per_head.size());
    }
    out.push_back(std::move(record));
  }
  return out;
}

PredictionRecord ParsePredictionLine(std::string_view line, int line_number) {
  const Json record = internal::ParseJsonLine(line, line_number);
  FieldReader r(record, line_number);
  PredictionRecord out;
  out.example_id = r.String("example_id");
  const auto label = ParseLabel(r.String("label"));
  if (!label) r.Fail("label", "unknown label");
  out.label = *label;
  const Json &probs = r.Array("probs");
  if (probs.size() != kNumLabels) r.Fail("probs", "expected four entries");
  for (int l = 0; l < kNumLabels; ++l) {
    if (!probs[l].is_number()) r.Fail("probs", "expected numbers");
    out.probs[l] = probs[l].get<double>();
  }
  return out;
}

std::string PredictionToLine(const PredictionRecord &record) {
  OrderedJson out;
  out["example_id"] = record.example_id;
  out["label"] = LabelName(record.label);
  out["probs"] = record.probs;
  return out.dump();
}

std::vector<PredictionRecord> ReadPredictions(std::istream &in) {
  std::vector<PredictionRecord> records;
  internal::ForEachRecordLine(in, [&](std::string_view line, int number) {
    records.push_back(ParsePredictionLine(line, number));
  });
  return records;
}

std::vector<PredictionRecord> ReadPredictions(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadPredictions(in);
}

void WritePredictions(std::ostream &out, const std::vector<PredictionRecord> &records) {
  for (const PredictionRecord &record : records) out << PredictionToLine(record) << '\n';
}

std::string EvalReportToJson(const EvalReport &report) {
  OrderedJson out;
  out["n"] = report.n;
  out["precision"] = report.precision;
  out["recall"] = report.recall;
  out["f1"] = report.f1;
  out["accuracy"] = report.accuracy;
  out["nonvague_accuracy"] = report.nonvague_accuracy;
  out["precision_undefined"] = report.precision_undefined;
  return out.dump();
}

std::string FormatEvalReport(const EvalReport &report) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "P=%.1f R=%.1f F1=%.1f Acc=%.1f NonVagueAcc=%.1f n=%d%s",
                report.precision, report.recall, report.f1, report.accuracy,
                report.nonvague_accuracy, report.n,
                report.precision_undefined ? " (no non-VAGUE predictions)" : "");
  return buffer;
}

}  // namespace tempdistill
