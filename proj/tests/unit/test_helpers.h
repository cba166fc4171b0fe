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

// Helpers for building small documents in unit tests.

#ifndef TEMPDISTILL_TESTS_UNIT_TEST_HELPERS_H_
#define TEMPDISTILL_TESTS_UNIT_TEST_HELPERS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tempdistill/corpus.h"

namespace tempdistill::testing {

struct TokenSpec {
  std::string text;
  std::string pos;
  std::string lemma;
  int head = -1;  // -1: root
  std::string dep = "dep";
};

inline Sentence MakeSentence(const std::vector<TokenSpec> &specs,
                             std::optional<std::string> tree = std::nullopt) {
  Sentence sentence;
  for (size_t i = 0; i < specs.size(); ++i) {
    Token token;
    token.index = static_cast<int>(i);
    token.text = specs[i].text;
    token.pos = specs[i].pos;
    token.lemma = specs[i].lemma.empty() ? specs[i].text : specs[i].lemma;
    if (specs[i].head >= 0) token.dep_head = specs[i].head;
    token.dep_label = specs[i].head >= 0 ? specs[i].dep : "root";
    sentence.tokens.push_back(std::move(token));
  }
  sentence.tree = std::move(tree);
  return sentence;
}

inline Document MakeDocument(std::vector<Sentence> sentences,
                             std::optional<CivilDate> dct = std::nullopt,
                             std::string doc_id = "doc", std::string source = "src") {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.source = std::move(source);
  doc.dct = dct;
  doc.sentences = std::move(sentences);
  return doc;
}

inline std::filesystem::path DataDir() { return TEMPDISTILL_DATA_DIR; }

inline std::vector<Document> FixtureDocuments() {
  std::vector<Document> docs =
      ReadDocuments(DataDir() / "fixtures" / "weak_label_examples.jsonl");
  for (Document &d : ReadDocuments(DataDir() / "fixtures" / "anchored_years.jsonl")) {
    docs.push_back(std::move(d));
  }
  return docs;
}

inline const Document &FixtureById(const std::vector<Document> &docs, const std::string &id) {
  for (const Document &d : docs) {
    if (d.doc_id == id) return d;
  }
  throw std::runtime_error("no fixture " + id);
}

}  // namespace tempdistill::testing

#endif  // TEMPDISTILL_TESTS_UNIT_TEST_HELPERS_H_
