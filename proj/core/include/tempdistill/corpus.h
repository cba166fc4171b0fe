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

#ifndef TEMPDISTILL_CORPUS_H_
#define TEMPDISTILL_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempdistill/calendar.h"
#include "tempdistill/parse_tree.h"

namespace tempdistill {

struct Token {
  int index = 0;
  std::string text;
  std::string lemma;
  std::string pos;
  std::optional<int> dep_head;  // nullopt for the root
  std::string dep_label;

  friend bool operator==(const Token &, const Token &) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::optional<std::string> tree;

  // Parses `tree`. Throws TreeMissing when absent.
  ParseTree ParsedTree() const;
  int size() const { return static_cast<int>(tokens.size()); }

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct Document {
  std::string doc_id;
  std::string source;
  std::optional<CivilDate> dct;
  std::vector<Sentence> sentences;

  friend bool operator==(const Document &, const Document &) = default;
};

// PTB verb tags: VB VBD VBG VBN VBP VBZ.
bool IsVerbTag(std::string_view pos);
// Lemmas that act as auxiliaries: be, have, do.
bool IsAuxiliaryLemma(std::string_view lemma);

// Returns one description per violated invariant; empty when the document
// is well formed.
std::vector<std::string> ValidateDocument(const Document &doc);

// Line-delimited interchange. Each line is one JSON document record with
// fields doc_id, source, dct, sentences. Blank lines and a leading manifest
// header line are skipped. Throws ParseError naming the line on malformed
// records and on invariant violations.
Document ParseDocumentLine(std::string_view line, int line_number);
std::vector<Document> ReadDocuments(std::istream &in);
std::vector<Document> ReadDocuments(const std::filesystem::path &path);

std::string DocumentToLine(const Document &doc);
void WriteDocuments(std::ostream &out, const std::vector<Document> &docs);

// Main verb of the verb phrase `node`: the leftmost verb-tagged leaf, except
// that a modal, or an auxiliary (be/have/do) followed by a verb phrase
// sibling, defers to the head of that verb phrase. Throws NoVerbFound.
int HeadVerb(const Sentence &sentence, const ParseTree &tree, int node);

}  // namespace tempdistill

#endif  // TEMPDISTILL_CORPUS_H_
