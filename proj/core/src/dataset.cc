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

#include "tempdistill/dataset.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "tempdistill/errors.h"
#include "tempdistill/util.h"

namespace tempdistill {

std::string ExampleId(const std::string &doc_id, int sent1, int token1, int sent2, int token2,
                      Heuristic heuristic) {
  const std::string key = doc_id + "|" + std::to_string(sent1) + "|" + std::to_string(token1) +
                          "|" + std::to_string(sent2) + "|" + std::to_string(token2) + "|" +
                          std::string(HeuristicName(heuristic));
  return Sha256Hex(key).substr(0, 16);
}

std::vector<LabeledExample> EmitExamples(const Document &doc,
                                         const std::vector<PairCandidate> &candidates,
                                         Heuristic heuristic, const MaskConfig &mask,
                                         bool apply_mask, EmitCounters *counters) {
  EmitCounters local;
  std::vector<LabeledExample> out;
  const int num_sentences = static_cast<int>(doc.sentences.size());
  for (const PairCandidate &c : candidates) {
    const bool ordered = c.sent1 < c.sent2 || (c.sent1 == c.sent2 && c.token1 < c.token2);
    if (!ordered || c.sent2 - c.sent1 > 1 || c.sent1 < 0 || c.sent2 >= num_sentences) {
      ++local.window_rejected;
      continue;
    }
    LabeledExample ex;
    ex.heuristic = heuristic;
    ex.doc_id = doc.doc_id;
    ex.source = doc.source;
    ex.id = ExampleId(doc.doc_id, c.sent1, c.token1, c.sent2, c.token2, heuristic);
    ex.label = c.label;
    const int offset = doc.sentences[c.sent1].size();
    for (int s = c.sent1; s <= c.sent2; ++s) {
      for (const Token &tok : doc.sentences[s].tokens) ex.tokens.push_back(tok.text);
    }
    ex.e1 = c.token1;
    ex.e2 = (c.sent2 == c.sent1 ? 0 : offset) + c.token2;

    std::set<std::tuple<int, int, int>> seen;
    bool covers_event = false;
    for (const DocSpan &span : c.cues) {
      if (span.sent != c.sent1 && span.sent != c.sent2) continue;
      const int base = span.sent == c.sent1 ? 0 : offset;
      const CueSpan cue{base + span.start, base + span.end, span.kind};
      if (!seen.insert({cue.start, cue.end, static_cast<int>(cue.kind)}).second) continue;
      if ((ex.e1 >= cue.start && ex.e1 < cue.end) || (ex.e2 >= cue.start && ex.e2 < cue.end)) {
        covers_event = true;
      }
      ex.cue_spans.push_back(cue);
    }
    if (covers_event) {
      ++local.event_masked;
      continue;
    }
    std::sort(ex.cue_spans.begin(), ex.cue_spans.end(), [](const CueSpan &a, const CueSpan &b) {
      return std::tie(a.start, a.end) < std::tie(b.start, b.end);
    });
    if (apply_mask) ex = MaskExample(ex, mask);
    ++local.emitted;
    out.push_back(std::move(ex));
  }
  if (counters != nullptr) {
    counters->emitted += local.emitted;
    counters->window_rejected += local.window_rejected;
    counters->event_masked += local.event_masked;
  }
  return out;
}

std::vector<LabeledExample> BalanceBySource(const std::vector<LabeledExample> &examples,
                                            int per_source_cap, uint64_t seed) {
  if (per_source_cap <= 0) throw Error("per-source cap must be positive");
  std::map<std::string, std::vector<int>> by_source;
  for (int i = 0; i < static_cast<int>(examples.size()); ++i) {
    by_source[examples[i].source].push_back(i);
  }
  Rng rng(seed);
  const size_t cap = static_cast<size_t>(per_source_cap);
  std::vector<int> chosen;
  for (const auto &[source, indices] : by_source) {
    std::vector<int> reservoir;
    for (size_t i = 0; i < indices.size(); ++i) {
      if (i < cap) {
        reservoir.push_back(indices[i]);
      } else {
        const uint64_t j = rng.UniformIndex(i + 1);
        if (j < cap) reservoir[j] = indices[i];
      }
    }
    chosen.insert(chosen.end(), reservoir.begin(), reservoir.end());
  }
  rng.Shuffle(chosen);
  std::vector<LabeledExample> out;
  out.reserve(chosen.size());
  for (int i : chosen) out.push_back(examples[i]);
  return out;
}

std::vector<LabeledExample> Subsample(const std::vector<LabeledExample> &examples, int size,
                                      uint64_t seed) {
  if (size < 0) throw Error("subsample size must be non-negative");
  if (static_cast<size_t>(size) >= examples.size()) return examples;
  std::vector<int> indices(examples.size());
  std::iota(indices.begin(), indices.end(), 0);
  Rng rng(seed);
  rng.Shuffle(indices);
  indices.resize(size);
  std::sort(indices.begin(), indices.end());
  std::vector<LabeledExample> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(examples[i]);
  return out;
}

std::pair<std::vector<LabeledExample>, std::vector<LabeledExample>> SplitByDocument(
    const std::vector<LabeledExample> &examples, double train_fraction, uint64_t seed) {
  if (!(train_fraction >= 0.0 && train_fraction <= 1.0)) {
    throw Error("train fraction must lie in [0, 1]");
  }
  std::set<std::string> doc_set;
  for (const LabeledExample &ex : examples) doc_set.insert(ex.doc_id);
  std::vector<std::string> docs(doc_set.begin(), doc_set.end());
  Rng rng(seed);
  rng.Shuffle(docs);
  const size_t n_train = static_cast<size_t>(std::llround(train_fraction * docs.size()));
  const std::set<std::string> train_docs(docs.begin(), docs.begin() + n_train);
  std::pair<std::vector<LabeledExample>, std::vector<LabeledExample>> out;
  for (const LabeledExample &ex : examples) {
    (train_docs.count(ex.doc_id) ? out.first : out.second).push_back(ex);
  }
  return out;
}

std::array<double, kNumLabels> LabelDistribution(const std::vector<LabeledExample> &examples) {
  if (examples.empty()) throw Error("label distribution of an empty dataset");
  std::array<double, kNumLabels> fractions{};
  for (const LabeledExample &ex : examples) fractions[LabelIndex(ex.label)] += 1.0;
  for (double &f : fractions) f /= static_cast<double>(examples.size());
  return fractions;
}

std::vector<RankedEvent> TopEvents(const std::vector<LabeledExample> &examples, int k) {
  std::map<std::string, int> counts;
  for (const LabeledExample &ex : examples) {
    ++counts[ToLower(ex.tokens[ex.e1])];
    ++counts[ToLower(ex.tokens[ex.e2])];
  }
  std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  std::vector<RankedEvent> out;
  const double mentions = 2.0 * static_cast<double>(examples.size());
  for (const auto &[word, count] : ranked) {
    if (static_cast<int>(out.size()) >= k) break;
    out.push_back({word, 100.0 * count / mentions});
  }
  return out;
}

std::vector<RankedTuple> TopTuples(const std::vector<LabeledExample> &examples, int k) {
  std::map<std::tuple<std::string, std::string, int>, int> counts;
  for (const LabeledExample &ex : examples) {
    ++counts[{ToLower(ex.tokens[ex.e1]), ToLower(ex.tokens[ex.e2]), LabelIndex(ex.label)}];
  }
  std::vector<std::pair<std::tuple<std::string, std::string, int>, int>> ranked(counts.begin(),
                                                                                counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  std::vector<RankedTuple> out;
  for (const auto &[key, count] : ranked) {
    if (static_cast<int>(out.size()) >= k) break;
    out.push_back({std::get<0>(key), std::get<1>(key), LabelAt(std::get<2>(key)),
                   100.0 * count / static_cast<double>(examples.size())});
  }
  return out;
}

DatasetStats ComputeStats(const std::vector<LabeledExample> &examples, int k) {
  DatasetStats stats;
  stats.n = static_cast<int>(examples.size());
  if (!examples.empty()) stats.label_fractions = LabelDistribution(examples);
  stats.top_events = TopEvents(examples, k);
  stats.top_tuples = TopTuples(examples, k);
  return stats;
}

}  // namespace tempdistill
