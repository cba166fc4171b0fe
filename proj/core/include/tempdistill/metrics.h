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

#ifndef TEMPDISTILL_METRICS_H_
#define TEMPDISTILL_METRICS_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tempdistill/labels.h"

namespace tempdistill {

// MATRES-style scores, in percent.
//   precision = correct non-VAGUE predictions / non-VAGUE predictions
//   recall    = correct non-VAGUE predictions / non-VAGUE golds
// A correct VAGUE prediction counts toward accuracy only.
struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  double nonvague_accuracy = 0.0;
  int n = 0;
  // No non-VAGUE predictions: precision is reported as 0.
  bool precision_undefined = false;
};

// Harmonic mean; 0 when both are 0.
double F1Score(double precision, double recall);

// Throws Error on empty or misaligned input.
EvalReport Evaluate(const std::vector<Label> &predictions, const std::vector<Label> &golds);

// Predicts the most frequent training label (ties to label order) everywhere.
EvalReport MajorityBaseline(const std::vector<Label> &train_labels,
                            const std::vector<Label> &golds);
Label MajorityLabel(const std::vector<Label> &labels);

struct PredictionRecord {
  std::string example_id;
  Label label = Label::kBefore;
  std::array<double, kNumLabels> probs{};
};

// Per-example majority vote across heads; ties go to the highest summed
// probability, then label order. Throws Error when example ids differ.
std::vector<PredictionRecord> Ensemble(
    const std::vector<std::vector<PredictionRecord>> &per_head);

// Prediction interchange: one {example_id, label, probs} record per line.
PredictionRecord ParsePredictionLine(std::string_view line, int line_number);
std::string PredictionToLine(const PredictionRecord &record);
std::vector<PredictionRecord> ReadPredictions(std::istream &in);
std::vector<PredictionRecord> ReadPredictions(const std::filesystem::path &path);
void WritePredictions(std::ostream &out, const std::vector<PredictionRecord> &records);

std::string EvalReportToJson(const EvalReport &report);
std::string FormatEvalReport(const EvalReport &report);

}  // namespace tempdistill

#endif  // TEMPDISTILL_METRICS_H_
