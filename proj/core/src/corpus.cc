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

#include "tempdistill/corpus.h"

#include <fstream>
#include <sstream>

#include "jsonl.h"
#include "tempdistill/errors.h"

namespace tempdistill {

using internal::FieldReader;
using internal::Json;
using internal::OrderedJson;

ParseTree Sentence::ParsedTree() const {
  if (!tree) throw TreeMissing();
  return ParseTree::Parse(*tree);
}

bool IsVerbTag(std::string_view pos) {
  return pos == "VB" || pos == "VBD" || pos == "VBG" || pos == "VBN" || pos == "VBP" ||
         pos == "VBZ";
}

bool IsAuxiliaryLemma(std::string_view lemma) {
  return lemma == "be" || lemma == "have" || lemma == "do";
}

namespace {

void ValidateSentence(const Sentence &sentence, int s, std::vector<std::string> &out) {
  const std::string where = "sentence " + std::to_string(s) + ": ";
  const int n = sentence.size();
  if (n == 0) {
    out.push_back(where + "no tokens");
    return;
  }
  int roots = 0;
  bool heads_ok = true;
  for (int i = 0; i < n; ++i) {
    const Token &tok = sentence.tokens[i];
    const std::string tok_where = where + "token " + std::to_string(i) + ": ";
    if (tok.index != i) out.push_back(tok_where + "index " + std::to_string(tok.index));
    if (tok.text.empty()) out.push_back(tok_where + "empty text");
    if (!tok.dep_head) {
      ++roots;
    } else if (*tok.dep_head == i) {
      out.push_back(tok_where + "governs itself");
      heads_ok = false;
    } else if (*tok.dep_head < 0 || *tok.dep_head >= n) {
      out.push_back(tok_where + "dep_head out of range");
      heads_ok = false;
    }
  }
  if (roots == 0) out.push_back(where + "no root");
  if (roots > 1) out.push_back(where + "multiple roots");
  if (heads_ok && roots == 1) {
    // Every chain of heads must reach the root within n steps.
    for (int i = 0; i < n; ++i) {
      int cur = i;
      int steps = 0;
      while (sentence.tokens[cur].dep_head && steps <= n) {
        cur = *sentence.tokens[cur].dep_head;
        ++steps;
      }
      if (steps > n) {
        out.push_back(where + "dependency cycle");
        break;
      }
    }
  }
  if (sentence.tree) {
    try {
      const ParseTree tree = ParseTree::Parse(*sentence.tree);
      if (tree.leaf_count() != n) {
        out.push_back(where + "leaf/token mismatch (" + std::to_string(tree.leaf_count()) +
                      " leaves, " + std::to_string(n) + " tokens)");
      } else {
        const std::vector<std::string> leaves = tree.LeafWords();
        for (int i = 0; i < n; ++i) {
          const std::string &text = sentence.tokens[i].text;
          if (leaves[i] != text && UnescapeTreeWord(leaves[i]) != text) {
            out.push_back(where + "leaf/token mismatch at token " + std::to_string(i) + " ('" +
                          leaves[i] + "' vs '" + text + "')");
            break;
          }
        }
      }
    } catch (const Error &e) {
      out.push_back(where + e.what());
    }
  }
}

Token ParseToken(const Json &value, int line, const std::string &path, int index) {
  FieldReader r(value, line, path);
  Token tok;
  tok.index = index;
  tok.text = r.String("text");
  tok.lemma = r.String("lemma");
  tok.pos = r.String("pos");
  const Json &head = r.Get("dep_head");
  if (head.is_null()) {
    tok.dep_head = std::nullopt;
  } else if (head.is_number_integer()) {
    tok.dep_head = head.get<int>();
  } else {
    r.Fail("dep_head", "expected an integer or null");
  }
  tok.dep_label = r.String("dep_label");
  return tok;
}

// Syntax only; calendar bounds are left to ValidateDocument.
std::optional<CivilDate> ParseDateSyntax(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int parts[3] = {0, 0, 0};
  const int offsets[3][2] = {{0, 4}, {5, 2}, {8, 2}};
  for (int p = 0; p < 3; ++p) {
    for (int i = 0; i < offsets[p][1]; ++i) {
      const char c = text[offsets[p][0] + i];
      if (c < '0' || c > '9') return std::nullopt;
      parts[p] = parts[p] * 10 + (c - '0');
    }
  }
  return CivilDate{parts[0], parts[1], parts[2]};
}

}  // namespace

std::vector<std::string> ValidateDocument(const Document &doc) {
  std::vector<std::string> out;
  if (doc.doc_id.empty()) out.push_back("doc_id is empty");
  if (doc.dct && !IsValidDate(doc.dct->year, doc.dct->month, doc.dct->day)) {
    out.push_back("invalid calendar date");
  }
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    ValidateSentence(doc.sentences[s], s, out);
  }
  return out;
}

Document ParseDocumentLine(std::string_view line, int line_number) {
  const Json record = internal::ParseJsonLine(line, line_number);
  FieldReader r(record, line_number);
  Document doc;
  doc.doc_id = r.String("doc_id");
  doc.source = r.String("source");
  const Json &dct = r.Get("dct");
  if (!dct.is_null()) {
    if (!dct.is_string()) r.Fail("dct", "expected a string or null");
    doc.dct = ParseDateSyntax(dct.get<std::string>());
    if (!doc.dct) r.Fail("dct", "expected YYYY-MM-DD");
  }
  const Json &sentences = r.Array("sentences");
  for (size_t s = 0; s < sentences.size(); ++s) {
    const std::string spath = "sentences[" + std::to_string(s) + "]";
    FieldReader sr(sentences[s], line_number, spath);
    Sentence sentence;
    const Json &tokens = sr.Array("tokens");
    for (size_t i = 0; i < tokens.size(); ++i) {
      sentence.tokens.push_back(ParseToken(tokens[i], line_number,
                                           spath + ".tokens[" + std::to_string(i) + "]",
                                           static_cast<int>(i)));
    }
    const Json &tree = sr.Get("tree");
    if (!tree.is_null()) {
      if (!tree.is_string()) sr.Fail("tree", "expected a string or null");
      sentence.tree = tree.get<std::string>();
    }
    doc.sentences.push_back(std::move(sentence));
  }
  const std::vector<std::string> violations = ValidateDocument(doc);
  if (!violations.empty()) {
    std::string message = "invalid document '" + doc.doc_id + "': " + violations.front();
    if (violations.size() > 1) {
      message += " (+" + std::to_string(violations.size() - 1) + " more)";
    }
    throw ParseError(line_number, message);
  }
  return doc;
}

std::vector<Document> ReadDocuments(std::istream &in) {
  std::vector<Document> docs;
  internal::ForEachRecordLine(in, [&](std::string_view line, int number) {
    docs.push_back(ParseDocumentLine(line, number));
  });
  return docs;
}

std::vector<Document> ReadDocuments(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadDocuments(in);
}

std::string DocumentToLine(const Document &doc) {
  OrderedJson record;
  record["doc_id"] = doc.doc_id;
  record["source"] = doc.source;
  record["dct"] = doc.dct ? OrderedJson(FormatIsoDate(*doc.dct)) : OrderedJson(nullptr);
  OrderedJson sentences = OrderedJson::array();
  for (const Sentence &sentence : doc.sentences) {
    OrderedJson tokens = OrderedJson::array();
    for (const Token &tok : sentence.tokens) {
      OrderedJson t;
      t["text"] = tok.text;
      t["lemma"] = tok.lemma;
      t["pos"] = tok.pos;
      t["dep_head"] = tok.dep_head ? OrderedJson(*tok.dep_head) : OrderedJson(nullptr);
      t["dep_label"] = tok.dep_label;
      tokens.push_back(std::move(t));
    }
    OrderedJson s;
    s["tokens"] = std::move(tokens);
    s["tree"] = sentence.tree ? OrderedJson(*sentence.tree) : OrderedJson(nullptr);
    sentences.push_back(std::move(s));
  }
  record["sentences"] = std::move(sentences);
  return record.dump();
}

void WriteDocuments(std::ostream &out, const std::vector<Document> &docs) {
  for (const Document &doc : docs) out << DocumentToLine(doc) << '\n';
}

int HeadVerb(const Sentence &sentence, const ParseTree &tree, int node) {
  for (int t : tree.TokensUnder(node)) {
    const Token &tok = sentence.tokens[t];
    const bool modal = tok.pos == "MD";
    if (!modal && !IsVerbTag(tok.pos)) continue;
    if (!modal && !IsAuxiliaryLemma(tok.lemma)) return t;

    // Modal or auxiliary: defer to a following VP sibling if there is one.
    const int pre = tree.preterminal(t);
    const int parent = tree.node(pre).parent;
    if (parent >= 0) {
      const auto &siblings = tree.node(parent).children;
      bool after = false;
      for (int sib : siblings) {
        if (sib == pre) {
          after = true;
          continue;
        }
        if (after && BaseLabel(tree.node(sib).label) == "VP") {
          try {
            return HeadVerb(sentence, tree, sib);
          } catch (const NoVerbFound &) {
            break;
          }
        }
      }
    }
    if (!modal) return t;  // copular or main-verb use of be/have/do
  }
  throw NoVerbFound();
}

}  // namespace tempdistill
