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

// Throughput benchmarks for timex detection, example extraction and head
// training.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tempdistill/corpus.h"
#include "tempdistill/pipeline.h"
#include "tempdistill/relhead.h"
#include "tempdistill/timex.h"
#include "tempdistill/util.h"

namespace tempdistill {
namespace {

std::vector<Document> Corpus(int copies) {
  const std::string dir = std::string(TEMPDISTILL_DATA_DIR) + "/fixtures/";
  std::vector<Document> base = ReadDocuments(dir + "weak_label_examples.jsonl");
  for (Document &d : ReadDocuments(dir + "anchored_years.jsonl")) base.push_back(std::move(d));
  std::vector<Document> out;
  for (int c = 0; c < copies; ++c) {
    for (Document d : base) {
      d.doc_id += "-" + std::to_string(c);
      out.push_back(std::move(d));
    }
  }
  return out;
}

void BM_DetectTimexes(benchmark::State &state) {
  const std::vector<Document> docs = Corpus(1);
  int64_t sentences = 0;
  for (auto _ : state) {
    for (const Document &doc : docs) {
      benchmark::DoNotOptimize(DetectTimexes(doc));
      sentences += static_cast<int64_t>(doc.sentences.size());
    }
  }
  state.SetItemsProcessed(sentences);
}
BENCHMARK(BM_DetectTimexes);

void BM_ExtractExamples(benchmark::State &state) {
  const std::vector<Document> docs = Corpus(100);
  ExtractConfig config;
  config.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractExamples(docs, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(docs.size()));
}
BENCHMARK(BM_ExtractExamples)->Arg(1)->Arg(4)->UseRealTime();

void BM_TrainEpoch(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<EmbeddingPair> pairs;
  std::vector<Label> labels;
  for (int i = 0; i < 1000; ++i) {
    EmbeddingPair p{"x", d, {}, {}};
    for (int k = 0; k < d; ++k) {
      p.e1.push_back(rng.UniformDouble());
      p.e2.push_back(rng.UniformDouble());
    }
    pairs.push_back(std::move(p));
    labels.push_back(LabelAt(i % kNumLabels));
  }
  TrainConfig config;
  config.epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Train(pairs, labels, config));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_TrainEpoch)->Arg(16)->Arg(64);

}  // namespace
}  // namespace tempdistill

BENCHMARK_MAIN();
