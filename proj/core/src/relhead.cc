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

#include "tempdistill/relhead.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "jsonl.h"
#include "tempdistill/errors.h"
#include "tempdistill/util.h"

namespace tempdistill {

using internal::FieldReader;
using internal::Json;
using internal::OrderedJson;

std::vector<double> BuildClassVector(const EmbeddingPair &pair) {
  const size_t d = pair.e1.size();
  if (pair.e2.size() != d || static_cast<int>(d) != pair.d) {
    throw DimensionMismatch("embedding pair '" + pair.example_id + "': expected d=" +
                            std::to_string(pair.d) + ", got " + std::to_string(pair.e1.size()) +
                            " and " + std::to_string(pair.e2.size()));
  }
  std::vector<double> v(4 * d);
  for (size_t i = 0; i < d; ++i) {
    v[i] = pair.e1[i];
    v[d + i] = pair.e2[i];
    v[2 * d + i] = pair.e1[i] * pair.e2[i];
    v[3 * d + i] = pair.e1[i] - pair.e2[i];
  }
  return v;
}

LinearHead::LinearHead(int d) : d_(d), weights_(static_cast<size_t>(kNumLabels) * 4 * d, 0.0) {
  if (d <= 0) throw DimensionMismatch("head dimension must be positive");
}

std::array<double, kNumLabels> LinearHead::Logits(std::span<const double> class_vector) const {
  if (static_cast<int>(class_vector.size()) != input_size()) {
    throw DimensionMismatch("class vector has " + std::to_string(class_vector.size()) +
                            " entries, head expects " + std::to_string(input_size()));
  }
  std::array<double, kNumLabels> logits = bias_;
  const int m = input_size();
  for (int l = 0; l < kNumLabels; ++l) {
    const double *row = weights_.data() + static_cast<size_t>(l) * m;
    double sum = 0.0;
    for (int c = 0; c < m; ++c) sum += row[c] * class_vector[c];
    logits[l] += sum;
  }
  return logits;
}

bool LinearHead::IsFinite() const {
  for (double w : weights_) {
    if (!std::isfinite(w)) return false;
  }
  for (double b : bias_) {
    if (!std::isfinite(b)) return false;
  }
  return true;
}

std::array<double, kNumLabels> Softmax(const std::array<double, kNumLabels> &logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  std::array<double, kNumLabels> probs{};
  double sum = 0.0;
  for (int l = 0; l < kNumLabels; ++l) {
    probs[l] = std::exp(logits[l] - top);
    sum += probs[l];
  }
  for (double &p : probs) p /= sum;
  return probs;
}

namespace {

bool AllFinite(const std::vector<double> &values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

int ArgMax(const std::array<double, kNumLabels> &values) {
  int best = 0;
  for (int l = 1; l < kNumLabels; ++l) {
    if (values[l] > values[best]) best = l;
  }
  return best;
}

// log sum exp of the logits.
double LogNormalizer(const std::array<double, kNumLabels> &logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double z : logits) sum += std::exp(z - top);
  return top + std::log(sum);
}

std::vector<std::vector<double>> ClassVectors(const std::vector<EmbeddingPair> &pairs) {
  std::vector<std::vector<double>> out;
  out.reserve(pairs.size());
  for (const EmbeddingPair &pair : pairs) {
    if (pair.d != pairs.front().d) {
      throw DimensionMismatch("mixed embedding dimensions " + std::to_string(pairs.front().d) +
                              " and " + std::to_string(pair.d));
    }
    out.push_back(BuildClassVector(pair));
  }
  return out;
}

void CheckAligned(size_t n_vectors, size_t n_labels) {
  if (n_vectors == 0) throw Error("no training examples");
  if (n_vectors != n_labels) {
    throw Error("got " + std::to_string(n_vectors) + " examples and " +
                std::to_string(n_labels) + " labels");
  }
}

}  // namespace

Prediction Predict(const LinearHead &head, const EmbeddingPair &pair) {
  if (pair.d != head.d()) {
    throw DimensionMismatch("embedding d=" + std::to_string(pair.d) + ", head d=" +
                            std::to_string(head.d()));
  }
  const std::vector<double> cv = BuildClassVector(pair);
  if (!AllFinite(cv)) throw Error("non-finite embedding for '" + pair.example_id + "'");
  Prediction prediction;
  prediction.probs = Softmax(head.Logits(cv));
  prediction.label = LabelAt(ArgMax(prediction.probs));
  return prediction;
}

LinearHead InitialHead(int d, const TrainConfig &config) {
  LinearHead head(d);
  Rng rng(config.seed);
  for (double &w : head.weights()) w = (2.0 * rng.UniformDouble() - 1.0) * config.init_scale;
  return head;
}

double MeanNll(const LinearHead &head, const std::vector<std::vector<double>> &class_vectors,
               const std::vector<Label> &labels, double l2) {
  CheckAligned(class_vectors.size(), labels.size());
  double total = 0.0;
  for (size_t i = 0; i < class_vectors.size(); ++i) {
    const auto logits = head.Logits(class_vectors[i]);
    total += LogNormalizer(logits) - logits[LabelIndex(labels[i])];
  }
  double loss = total / static_cast<double>(class_vectors.size());
  if (l2 != 0.0) {
    double sq = 0.0;
    for (double w : head.weights()) sq += w * w;
    loss += 0.5 * l2 * sq;
  }
  return loss;
}

std::vector<double> NllGradient(const LinearHead &head,
                                const std::vector<std::vector<double>> &class_vectors,
                                const std::vector<Label> &labels, double l2) {
  CheckAligned(class_vectors.size(), labels.size());
  const int m = head.input_size();
  const size_t n_weights = static_cast<size_t>(kNumLabels) * m;
  std::vector<double> grad(n_weights + kNumLabels, 0.0);
  const double scale = 1.0 / static_cast<double>(class_vectors.size());
  for (size_t i = 0; i < class_vectors.size(); ++i) {
    const std::vector<double> &x = class_vectors[i];
    auto delta = Softmax(head.Logits(x));
    delta[LabelIndex(labels[i])] -= 1.0;
    for (int l = 0; l < kNumLabels; ++l) {
      const double g = delta[l] * scale;
      double *row = grad.data() + static_cast<size_t>(l) * m;
      for (int c = 0; c < m; ++c) row[c] += g * x[c];
      grad[n_weights + l] += g;
    }
  }
  if (l2 != 0.0) {
    for (size_t k = 0; k < n_weights; ++k) grad[k] += l2 * head.weights()[k];
  }
  return grad;
}

TrainResult Train(const std::vector<EmbeddingPair> &pairs, const std::vector<Label> &labels,
                  const TrainConfig &config) {
  CheckAligned(pairs.size(), labels.size());
  if (!(config.lr > 0.0) || config.epochs < 0) throw Error("lr must be positive, epochs >= 0");
  const auto class_vectors = ClassVectors(pairs);
  for (const auto &cv : class_vectors) {
    if (!AllFinite(cv)) throw Error("non-finite embedding in training data");
  }
  TrainResult result{InitialHead(pairs.front().d, config), {}};
  LinearHead &head = result.head;
  const size_t n_weights = head.weights().size();
  result.loss_trace.push_back(MeanNll(head, class_vectors, labels, config.l2));
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    const std::vector<double> grad = NllGradient(head, class_vectors, labels, config.l2);
    for (size_t k = 0; k < n_weights; ++k) head.weights()[k] -= config.lr * grad[k];
    for (int l = 0; l < kNumLabels; ++l) head.bias()[l] -= config.lr * grad[n_weights + l];
    const double loss = MeanNll(head, class_vectors, labels, config.l2);
    if (!std::isfinite(loss) || !head.IsFinite()) throw TrainingDiverged(epoch);
    result.loss_trace.push_back(loss);
  }
  return result;
}

double GradCheck(const LinearHead &head, const std::vector<EmbeddingPair> &pairs,
                 const std::vector<Label> &labels, double l2) {
  constexpr double kStep = 1e-5;
  const auto class_vectors = ClassVectors(pairs);
  const std::vector<double> analytic = NllGradient(head, class_vectors, labels, l2);
  const size_t n_weights = head.weights().size();
  LinearHead probe = head;
  double worst = 0.0;
  for (size_t k = 0; k < analytic.size(); ++k) {
    double &param = k < n_weights ? probe.weights()[k] : probe.bias()[k - n_weights];
    const double saved = param;
    param = saved + kStep;
    const double plus = MeanNll(probe, class_vectors, labels, l2);
    param = saved - kStep;
    const double minus = MeanNll(probe, class_vectors, labels, l2);
    param = saved;
    const double numeric = (plus - minus) / (2.0 * kStep);
    const double denom = std::max({std::abs(analytic[k]), std::abs(numeric), 1e-8});
    worst = std::max(worst, std::abs(analytic[k] - numeric) / denom);
  }
  return worst;
}

namespace {

std::vector<double> NumberArray(const FieldReader &r, const char *name) {
  std::vector<double> out;
  for (const Json &v : r.Array(name)) {
    if (!v.is_number()) r.Fail(name, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

EmbeddingPair ParseEmbeddingLine(std::string_view line, int line_number) {
  const Json record = internal::ParseJsonLine(line, line_number);
  FieldReader r(record, line_number);
  EmbeddingPair pair;
  pair.example_id = r.String("example_id");
  pair.d = r.Int("d");
  if (pair.d <= 0) r.Fail("d", "must be positive");
  pair.e1 = NumberArray(r, "e1_vec");
  pair.e2 = NumberArray(r, "e2_vec");
  if (static_cast<int>(pair.e1.size()) != pair.d) r.Fail("e1_vec", "length differs from d");
  if (static_cast<int>(pair.e2.size()) != pair.d) r.Fail("e2_vec", "length differs from d");
  return pair;
}

std::string EmbeddingToLine(const EmbeddingPair &pair) {
  OrderedJson record;
  record["example_id"] = pair.example_id;
  record["d"] = pair.d;
  record["e1_vec"] = pair.e1;
  record["e2_vec"] = pair.e2;
  return record.dump();
}

std::vector<EmbeddingPair> ReadEmbeddings(std::istream &in) {
  std::vector<EmbeddingPair> pairs;
  internal::ForEachRecordLine(in, [&](std::string_view line, int number) {
    pairs.push_back(ParseEmbeddingLine(line, number));
  });
  return pairs;
}

std::vector<EmbeddingPair> ReadEmbeddings(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadEmbeddings(in);
}

void WriteEmbeddings(std::ostream &out, const std::vector<EmbeddingPair> &pairs) {
  for (const EmbeddingPair &pair : pairs) out << EmbeddingToLine(pair) << '\n';
}

std::string HeadToJson(const LinearHead &head) {
  OrderedJson record;
  record["d"] = head.d();
  OrderedJson order = OrderedJson::array();
  for (Label l : kAllLabels) order.push_back(LabelName(l));
  record["label_order"] = std::move(order);
  OrderedJson w = OrderedJson::array();
  for (int l = 0; l < kNumLabels; ++l) {
    const auto begin = head.weights().begin() + static_cast<ptrdiff_t>(l) * head.input_size();
    w.push_back(std::vector<double>(begin, begin + head.input_size()));
  }
  record["W"] = std::move(w);
  record["b"] = head.bias();
  return record.dump();
}

LinearHead HeadFromJson(std::string_view text) {
  const Json record = internal::ParseJsonLine(text, 1);
  FieldReader r(record, 1);
  const int d = r.Int("d");
  if (d <= 0) r.Fail("d", "must be positive");
  const Json &order = r.Array("label_order");
  if (order.size() != kNumLabels) r.Fail("label_order", "expected four labels");
  for (int l = 0; l < kNumLabels; ++l) {
    if (!order[l].is_string() || order[l].get<std::string>() != LabelName(LabelAt(l))) {
      r.Fail("label_order", "expected BEFORE, AFTER, EQUAL, VAGUE");
    }
  }
  LinearHead head(d);
  const Json &w = r.Array("W");
  if (w.size() != kNumLabels) r.Fail("W", "expected four rows");
  for (int l = 0; l < kNumLabels; ++l) {
    if (!w[l].is_array() || static_cast<int>(w[l].size()) != head.input_size()) {
      r.Fail("W", "row " + std::to_string(l) + " must have " +
                      std::to_string(head.input_size()) + " entries");
    }
    for (int c = 0; c < head.input_size(); ++c) {
      if (!w[l][c].is_number()) r.Fail("W", "expected numbers");
      head.weight(l, c) = w[l][c].get<double>();
    }
  }
  const std::vector<double> b = NumberArray(r, "b");
  if (b.size() != kNumLabels) r.Fail("b", "expected four entries");
  std::copy(b.begin(), b.end(), head.bias().begin());
  if (!head.IsFinite()) throw ParseError(1, "head contains non-finite values");
  return head;
}

}  // namespace tempdistill
