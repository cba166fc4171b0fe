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

#ifndef TEMPDISTILL_RELHEAD_H_
#define TEMPDISTILL_RELHEAD_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempdistill/labels.h"

namespace tempdistill {

// Encoder outputs at the first subword of each event word.
struct EmbeddingPair {
  std::string example_id;
  int d = 0;
  std::vector<double> e1;
  std::vector<double> e2;
};

// [e1 ; e2 ; e1 * e2 ; e1 - e2], 4d entries. Throws DimensionMismatch.
std::vector<double> BuildClassVector(const EmbeddingPair &pair);

// A 4-way linear classifier over class vectors. Rows follow the label order
// BEFORE, AFTER, EQUAL, VAGUE.
class LinearHead {
 public:
  LinearHead() = default;
  explicit LinearHead(int d);

  int d() const { return d_; }
  int input_size() const { return 4 * d_; }

  // Row-major kNumLabels x input_size().
  std::vector<double> &weights() { return weights_; }
  const std::vector<double> &weights() const { return weights_; }
  double &weight(int label, int column) { return weights_[label * input_size() + column]; }
  double weight(int label, int column) const { return weights_[label * input_size() + column]; }

  std::array<double, kNumLabels> &bias() { return bias_; }
  const std::array<double, kNumLabels> &bias() const { return bias_; }

  std::array<double, kNumLabels> Logits(std::span<const double> class_vector) const;

  bool IsFinite() const;

  friend bool operator==(const LinearHead &, const LinearHead &) = default;

 private:
  int d_ = 0;
  std::vector<double> weights_;
  std::array<double, kNumLabels> bias_{};
};

std::array<double, kNumLabels> Softmax(const std::array<double, kNumLabels> &logits);

struct Prediction {
  Label label = Label::kBefore;
  std::array<double, kNumLabels> probs{};
};

// argmax of softmax(W c + b); ties go to the earlier label. Throws Error on
// non-finite input, DimensionMismatch when d differs from the head.
Prediction Predict(const LinearHead &head, const EmbeddingPair &pair);

struct TrainConfig {
  double lr = 0.05;
  int epochs = 500;
  uint64_t seed = 1;
  double l2 = 0.0;
  double init_scale = 0.01;
};

struct TrainResult {
  LinearHead head;
  // loss_trace[0] is the loss at initialization, loss_trace[e] after epoch e.
  std::vector<double> loss_trace;
};

// Seeded uniform initialization in [-init_scale, init_scale].
LinearHead InitialHead(int d, const TrainConfig &config);

// Full-batch gradient descent on mean negative log-likelihood plus
// (l2 / 2) * ||W||^2. Throws Error on empty data, DimensionMismatch on mixed
// d, TrainingDiverged when the loss stops being finite.
TrainResult Train(const std::vector<EmbeddingPair> &pairs, const std::vector<Label> &labels,
                  const TrainConfig &config);

// Objective and its analytic gradient, laid out as weights then bias.
double MeanNll(const LinearHead &head, const std::vector<std::vector<double>> &class_vectors,
               const std::vector<Label> &labels, double l2 = 0.0);
std::vector<double> NllGradient(const LinearHead &head,
                                const std::vector<std::vector<double>> &class_vectors,
                                const std::vector<Label> &labels, double l2 = 0.0);

// Max relative error between the analytic gradient and central finite
// differences (step 1e-5) over every weight and bias entry.
double GradCheck(const LinearHead &head, const std::vector<EmbeddingPair> &pairs,
                 const std::vector<Label> &labels, double l2 = 0.0);

// Embedding interchange: one {example_id, d, e1_vec, e2_vec} record per line.
EmbeddingPair ParseEmbeddingLine(std::string_view line, int line_number);
std::string EmbeddingToLine(const EmbeddingPair &pair);
std::vector<EmbeddingPair> ReadEmbeddings(std::istream &in);
std::vector<EmbeddingPair> ReadEmbeddings(const std::filesystem::path &path);
void WriteEmbeddings(std::ostream &out, const std::vector<EmbeddingPair> &pairs);

// {d, label_order, W, b}; W row-major.
std::string HeadToJson(const LinearHead &head);
LinearHead HeadFromJson(std::string_view text);

}  // namespace tempdistill

#endif  // TEMPDISTILL_RELHEAD_H_
