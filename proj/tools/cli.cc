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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempdistill/corpus.h"
#include "tempdistill/dataset.h"
#include "tempdistill/errors.h"
#include "tempdistill/example.h"
#include "tempdistill/masker.h"
#include "tempdistill/metrics.h"
#include "tempdistill/pipeline.h"
#include "tempdistill/relhead.h"
#include "tempdistill/timex.h"
#include "tempdistill/util.h"

namespace tempdistill::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr const char *kToolVersion = "0.1.0";
constexpr const char *kManifestKey = "_manifest";

// ---------------------------------------------------------------------------
// Configuration

// Flag values as parsed; the `set` flags say which ones were given.
struct Flags {
  std::string config;
  std::vector<std::string> inputs;
  std::string out;
  std::string heuristic;
  bool mask = true;
  bool mask_set = false;
  int size = 0;
  uint64_t seed = 0;
  int sources_cap = 0;
  double split = 0.0;
  std::string seeds;
  std::string labels;
  std::string embeddings;
  int threads = 0;
};

// Effective settings. Every key has a default; the config file and then the
// flags override them.
Json DefaultConfig() {
  return Json{
      {"heuristic", "both"},
      {"mask", true},
      {"mask_literal", "[mask]"},
      {"mask_all_timexes", true},
      {"mask_beforeafter_timexes", false},
      {"size", nullptr},
      {"seed", 1},
      {"sources_cap", nullptr},
      {"split", 0.8},
      {"seeds", nullptr},
      {"lr", 0.05},
      {"epochs", 500},
      {"l2", 0.0},
      {"init_scale", 0.01},
      {"top_k", 10},
      {"rules", nullptr},
  };
}

// Keys accepted in a config file beyond the settings above. They locate
// files and are not part of the hashed configuration.
const std::set<std::string> &PathKeys() {
  static const std::set<std::string> kKeys = {"input", "out", "labels", "embeddings", "threads"};
  return kKeys;
}

[[noreturn]] void ConfigError(const std::string &message) {
  throw ValidationError("invalid config: " + message);
}

bool SameKind(const Json &value, const Json &default_value, const std::string &key) {
  if (value.is_null()) {
    return key == "size" || key == "sources_cap" || key == "seeds" || key == "rules";
  }
  if (key == "size" || key == "sources_cap" || key == "seed" || key == "epochs" ||
      key == "top_k") {
    return value.is_number_integer();
  }
  if (key == "seeds") return value.is_array();
  if (key == "rules") return value.is_string();
  if (default_value.is_number()) return value.is_number();
  if (default_value.is_boolean()) return value.is_boolean();
  if (default_value.is_string()) return value.is_string();
  return false;
}

struct Settings {
  Json config;  // hashed, recorded in manifests
  std::vector<std::string> inputs;
  std::string out;
  std::string labels;
  std::string embeddings;
  int threads = 0;
};

std::vector<uint64_t> ParseSeedList(const std::string &text) {
  std::vector<uint64_t> seeds;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      ConfigError("--seeds expects a comma-separated list of non-negative integers");
    }
    seeds.push_back(std::stoull(piece));
  }
  if (seeds.empty()) ConfigError("--seeds is empty");
  return seeds;
}

void ValidateConfig(const Json &c) {
  if (!ParseHeuristicSelection(c["heuristic"].get<std::string>())) {
    ConfigError("heuristic must be beforeafter, distanttimex or both");
  }
  if (c["seed"].get<int64_t>() < 0) ConfigError("seed must be non-negative");
  if (!c["size"].is_null() && c["size"].get<int64_t>() <= 0) ConfigError("size must be positive");
  if (!c["sources_cap"].is_null() && c["sources_cap"].get<int64_t>() <= 0) {
    ConfigError("sources_cap must be positive");
  }
  const double split = c["split"].get<double>();
  if (!(split > 0.0 && split < 1.0)) ConfigError("split must lie strictly between 0 and 1");
  if (!c["seeds"].is_null()) {
    if (c["seeds"].empty()) ConfigError("seeds is empty");
    for (const Json &s : c["seeds"]) {
      if (!s.is_number_integer() || s.get<int64_t>() < 0) {
        ConfigError("seeds must be non-negative integers");
      }
    }
  }
  if (!(c["lr"].get<double>() > 0.0)) ConfigError("lr must be positive");
  if (c["epochs"].get<int64_t>() < 0) ConfigError("epochs must be non-negative");
  if (c["l2"].get<double>() < 0.0) ConfigError("l2 must be non-negative");
  if (c["init_scale"].get<double>() < 0.0) ConfigError("init_scale must be non-negative");
  if (c["top_k"].get<int64_t>() <= 0) ConfigError("top_k must be positive");
  MaskConfig mask;
  mask.mask_literal = c["mask_literal"].get<std::string>();
  try {
    mask.Validate();
  } catch (const Error &e) {
    ConfigError(e.what());
  }
}

Settings ResolveSettings(const Flags &flags, const CLI::App &sub) {
  Settings s;
  s.config = DefaultConfig();
  if (!flags.config.empty()) {
    Json file;
    try {
      file = Json::parse(ReadFile(flags.config));
    } catch (const Json::parse_error &e) {
      ConfigError(flags.config + ": " + e.what());
    }
    if (!file.is_object()) ConfigError(flags.config + ": expected a JSON object");
    for (const auto &[key, value] : file.items()) {
      if (PathKeys().count(key)) continue;
      if (!s.config.contains(key)) ConfigError("unknown key '" + key + "'");
      if (!SameKind(value, s.config[key], key)) ConfigError("key '" + key + "' has the wrong type");
      s.config[key] = value;
    }
    if (file.contains("input")) {
      const Json &input = file["input"];
      if (input.is_string()) {
        s.inputs.push_back(input.get<std::string>());
      } else if (input.is_array() &&
                 std::all_of(input.begin(), input.end(), [](const Json &v) { return v.is_string(); })) {
        for (const Json &v : input) s.inputs.push_back(v.get<std::string>());
      } else {
        ConfigError("key 'input' must be a path or a list of paths");
      }
    }
    for (const char *key : {"out", "labels", "embeddings"}) {
      if (!file.contains(key)) continue;
      if (!file[key].is_string()) ConfigError(std::string("key '") + key + "' must be a path");
      const std::string value = file[key].get<std::string>();
      if (std::string(key) == "out") s.out = value;
      if (std::string(key) == "labels") s.labels = value;
      if (std::string(key) == "embeddings") s.embeddings = value;
    }
    if (file.contains("threads")) {
      if (!file["threads"].is_number_integer()) ConfigError("key 'threads' must be an integer");
      s.threads = file["threads"].get<int>();
    }
  }

  // Flags win over the file.
  if (!flags.inputs.empty()) s.inputs = flags.inputs;
  if (sub.count("--out")) s.out = flags.out;
  if (sub.count("--labels")) s.labels = flags.labels;
  if (sub.count("--embeddings")) s.embeddings = flags.embeddings;
  if (sub.count("--threads")) s.threads = flags.threads;
  if (sub.count("--heuristic")) s.config["heuristic"] = flags.heuristic;
  if (flags.mask_set) s.config["mask"] = flags.mask;
  if (sub.count("--size")) s.config["size"] = flags.size;
  if (sub.count("--seed")) s.config["seed"] = flags.seed;
  if (sub.count("--sources-cap")) s.config["sources_cap"] = flags.sources_cap;
  if (sub.count("--split")) s.config["split"] = flags.split;
  if (sub.count("--seeds")) s.config["seeds"] = ParseSeedList(flags.seeds);

  if (const auto h = ParseHeuristicSelection(s.config["heuristic"].get<std::string>())) {
    s.config["heuristic"] = std::string(HeuristicSelectionName(*h));
  }
  ValidateConfig(s.config);
  if (s.out.empty()) ConfigError("no output directory (--out)");
  return s;
}

MaskConfig MaskFromConfig(const Json &c) {
  MaskConfig mask;
  mask.mask_literal = c["mask_literal"].get<std::string>();
  mask.mask_all_timexes = c["mask_all_timexes"].get<bool>();
  mask.mask_beforeafter_timexes = c["mask_beforeafter_timexes"].get<bool>();
  return mask;
}

std::vector<uint64_t> SeedsFromConfig(const Json &c) {
  if (c["seeds"].is_null()) return {c["seed"].get<uint64_t>()};
  std::vector<uint64_t> seeds;
  for (const Json &s : c["seeds"]) seeds.push_back(s.get<uint64_t>());
  return seeds;
}

// ---------------------------------------------------------------------------
// Manifests and output files

std::string RelativePath(const fs::path &target, const fs::path &base) {
  const fs::path t = fs::weakly_canonical(fs::absolute(target));
  const fs::path b = fs::weakly_canonical(fs::absolute(base));
  const fs::path rel = t.lexically_relative(b);
  return (rel.empty() ? t : rel).generic_string();
}

struct InputFile {
  std::string role;
  fs::path path;
};

// Collects the outputs of one subcommand and writes them under a manifest.
// The run manifest is written first with status "incomplete" and rewritten
// as "complete" only after every output file is on disk.
class Run {
 public:
  Run(std::string subcommand, const Settings &settings, std::vector<InputFile> inputs,
      Json seed)
      : subcommand_(std::move(subcommand)), out_dir_(settings.out) {
    header_["tool"] = "tempdistill";
    header_["version"] = kToolVersion;
    header_["subcommand"] = subcommand_;
    header_["config_hash"] = Sha256Hex(settings.config.dump());
    header_["config"] = OrderedJson::parse(settings.config.dump());
    header_["seed"] = OrderedJson::parse(seed.dump());
    OrderedJson ins = OrderedJson::array();
    for (const InputFile &in : inputs) {
      OrderedJson entry;
      entry["role"] = in.role;
      entry["path"] = RelativePath(in.path, out_dir_);
      entry["sha256"] = Sha256File(in.path);
      ins.push_back(std::move(entry));
    }
    header_["inputs"] = std::move(ins);
  }

  const OrderedJson &header() const { return header_; }
  void SetSummary(OrderedJson summary) { summary_ = std::move(summary); }

  // The manifest embedded in each output file.
  OrderedJson Embedded() const {
    OrderedJson m = header_;
    m["status"] = "complete";
    if (!summary_.is_null()) m["summary"] = summary_;
    return m;
  }

  void Begin() {
    fs::create_directories(out_dir_);
    WriteRunManifest("incomplete");
  }

  // Line-delimited records after a manifest header line.
  void WriteJsonl(const std::string &name, const std::vector<std::string> &lines) {
    std::string text;
    OrderedJson head;
    head[kManifestKey] = Embedded();
    text += head.dump() + "\n";
    for (const std::string &line : lines) text += line + "\n";
    WriteFile(name, text);
  }

  // A JSON object whose first key is the manifest.
  void WriteJson(const std::string &name, const OrderedJson &body) {
    OrderedJson doc;
    doc[kManifestKey] = Embedded();
    for (const auto &[key, value] : body.items()) doc[key] = value;
    WriteFile(name, doc.dump(2) + "\n");
  }

  // A plain-text table preceded by a comment line carrying the manifest.
  void WriteText(const std::string &name, const std::string &body) {
    WriteFile(name, "# manifest: " + Embedded().dump() + "\n" + body);
  }

  void Finish() { WriteRunManifest("complete"); }

  std::string ManifestName() const { return "manifest-" + subcommand_ + ".json"; }

 private:
  void WriteFile(const std::string &name, const std::string &text) {
    const fs::path path = out_dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw Error("failed writing " + path.string());
    outputs_.push_back({name, Sha256Hex(text)});
  }

  void WriteRunManifest(const std::string &status) {
    OrderedJson m = header_;
    m["status"] = status;
    if (!summary_.is_null()) m["summary"] = summary_;
    OrderedJson outs = OrderedJson::array();
    for (const auto &[name, hash] : outputs_) {
      OrderedJson entry;
      entry["path"] = name;
      entry["sha256"] = hash;
      outs.push_back(std::move(entry));
    }
    m["outputs"] = std::move(outs);
    const fs::path path = out_dir_ / ManifestName();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << m.dump(2) << "\n";
  }

  std::string subcommand_;
  fs::path out_dir_;
  OrderedJson header_;
  OrderedJson summary_;
  std::vector<std::pair<std::string, std::string>> outputs_;
};

std::vector<std::string> ExampleLines(const std::vector<LabeledExample> &examples) {
  std::vector<std::string> lines;
  lines.reserve(examples.size());
  for (const LabeledExample &ex : examples) lines.push_back(ExampleToLine(ex));
  return lines;
}

std::string Percent(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", value);
  return buffer;
}

OrderedJson LabelCounts(const std::vector<LabeledExample> &examples) {
  std::array<int, kNumLabels> counts{};
  for (const LabeledExample &ex : examples) ++counts[LabelIndex(ex.label)];
  OrderedJson out;
  for (Label l : kAllLabels) out[std::string(LabelName(l))] = counts[LabelIndex(l)];
  return out;
}

const fs::path &RequireOneInput(const std::vector<fs::path> &inputs, const char *what) {
  if (inputs.size() != 1) {
    throw ValidationError(std::string("expected exactly one --input (") + what + ")");
  }
  return inputs.front();
}

std::map<std::string, Label> LabelsById(const fs::path &path) {
  std::map<std::string, Label> labels;
  for (const LabeledExample &ex : ReadExamples(path)) labels[ex.id] = ex.label;
  return labels;
}

std::vector<Label> AlignLabels(const std::vector<std::string> &ids,
                               const std::map<std::string, Label> &labels) {
  std::vector<Label> out;
  out.reserve(ids.size());
  for (const std::string &id : ids) {
    const auto it = labels.find(id);
    if (it == labels.end()) throw ValidationError("no label for example '" + id + "'");
    out.push_back(it->second);
  }
  return out;
}

OrderedJson ReportJson(const EvalReport &report) { return OrderedJson::parse(EvalReportToJson(report)); }

std::string EvalTableRow(const std::string &name, const EvalReport &r) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%-24s %6.1f %6.1f %6.1f %6.1f %8.1f %6d\n",
                name.c_str(), r.precision, r.recall, r.f1, r.accuracy, r.nonvague_accuracy, r.n);
  return buffer;
}

std::string EvalTableHeader() {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%-24s %6s %6s %6s %6s %8s %6s\n", "model", "P", "R",
                "F1", "Acc", "NVAcc", "n");
  return buffer;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Context {
  Settings settings;
  std::vector<fs::path> inputs;
  std::ostream &out;
};

void Ingest(Context &ctx) {
  if (ctx.inputs.empty()) throw ValidationError("ingest needs at least one --input");
  std::vector<Document> docs;
  std::vector<InputFile> files;
  for (const fs::path &path : ctx.inputs) {
    std::vector<Document> part = ReadDocuments(path);
    docs.insert(docs.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
    files.push_back({"documents", path});
  }
  std::set<std::string> ids;
  for (const Document &doc : docs) {
    if (!ids.insert(doc.doc_id).second) {
      throw ValidationError("duplicate doc_id '" + doc.doc_id + "'");
    }
  }
  std::stable_sort(docs.begin(), docs.end(),
                   [](const Document &a, const Document &b) { return a.doc_id < b.doc_id; });
  int sentences = 0;
  int with_tree = 0;
  std::map<std::string, int> sources;
  for (const Document &doc : docs) {
    ++sources[doc.source];
    for (const Sentence &s : doc.sentences) {
      ++sentences;
      if (s.tree) ++with_tree;
    }
  }
  Run run("ingest", ctx.settings, files, nullptr);
  OrderedJson summary;
  summary["documents"] = docs.size();
  summary["sentences"] = sentences;
  summary["sentences_with_tree"] = with_tree;
  summary["sources"] = sources;
  run.SetSummary(summary);
  run.Begin();
  std::vector<std::string> lines;
  for (const Document &doc : docs) lines.push_back(DocumentToLine(doc));
  run.WriteJsonl("documents.jsonl", lines);
  run.Finish();
  ctx.out << "ingested " << docs.size() << " documents\n";
}

void Extract(Context &ctx) {
  const fs::path &input = RequireOneInput(ctx.inputs, "documents");
  const Json &c = ctx.settings.config;
  const std::vector<Document> docs = ReadDocuments(input);
  std::vector<InputFile> files = {{"documents", input}};
  std::optional<TimexRules> rules;
  if (!c["rules"].is_null()) {
    rules = TimexRules::Load(c["rules"].get<std::string>());
    files.push_back({"rules", c["rules"].get<std::string>()});
  }
  ExtractConfig config;
  config.heuristics = *ParseHeuristicSelection(c["heuristic"].get<std::string>());
  config.mask = MaskFromConfig(c);
  config.apply_mask = c["mask"].get<bool>();
  config.threads = ctx.settings.threads;
  config.rules = rules ? &*rules : nullptr;
  const ExtractionResult result = ExtractExamples(docs, config);

  Run run("extract", ctx.settings, files, c["seed"]);
  const ExtractCounters &k = result.counters;
  OrderedJson summary;
  summary["documents"] = k.documents;
  summary["examples"] = result.examples.size();
  summary["beforeafter_examples"] = k.beforeafter_examples;
  summary["distanttimex_examples"] = k.distanttimex_examples;
  summary["labels"] = LabelCounts(result.examples);
  summary["missing_tree"] = k.missing_tree;
  summary["no_parent_vp"] = k.no_parent_vp;
  summary["no_child_vp"] = k.no_child_vp;
  summary["connective_in_timex"] = k.connective_in_timex;
  summary["event_masked"] = k.event_masked;
  summary["window_rejected"] = k.window_rejected;
  summary["duplicates_dropped"] = k.duplicates_dropped;
  summary["rules_version"] = rules ? rules->version() : TimexRules::Default().version();
  run.SetSummary(summary);
  run.Begin();
  run.WriteJsonl("examples.jsonl", ExampleLines(result.examples));
  run.Finish();
  ctx.out << "extracted " << result.examples.size() << " examples (" << k.beforeafter_examples
          << " beforeafter, " << k.distanttimex_examples << " distanttimex)\n";
}

void Mask(Context &ctx) {
  const fs::path &input = RequireOneInput(ctx.inputs, "examples");
  const Json &c = ctx.settings.config;
  std::vector<LabeledExample> examples = ReadExamples(input);
  const MaskConfig mask = MaskFromConfig(c);
  const bool apply = c["mask"].get<bool>();
  int masked = 0;
  for (LabeledExample &ex : examples) {
    if (apply) {
      ex = MaskExample(ex, mask);
      ++masked;
    } else {
      ex.masked_tokens.reset();
    }
  }
  const MaskStats stats = ComputeMaskStats(examples);
  Run run("mask", ctx.settings, {{"examples", input}}, nullptr);
  OrderedJson summary;
  summary["examples"] = examples.size();
  summary["masked"] = masked;
  summary["mean_mask_ratio"] = stats.mean;
  summary["max_mask_ratio"] = stats.max;
  run.SetSummary(summary);
  run.Begin();
  run.WriteJsonl("masked.jsonl", ExampleLines(examples));
  run.Finish();
  ctx.out << (apply ? "masked " : "unmasked ") << examples.size() << " examples\n";
}

void Stats(Context &ctx) {
  const fs::path &input = RequireOneInput(ctx.inputs, "examples");
  const std::vector<LabeledExample> examples = ReadExamples(input);
  const int k = ctx.settings.config["top_k"].get<int>();
  const DatasetStats stats = ComputeStats(examples, k);
  const MaskStats mask = ComputeMaskStats(examples);

  OrderedJson body;
  body["n"] = stats.n;
  OrderedJson fractions;
  for (Label l : kAllLabels) {
    fractions[std::string(LabelName(l))] = stats.label_fractions[LabelIndex(l)];
  }
  body["label_fractions"] = fractions;
  OrderedJson events = OrderedJson::array();
  for (const RankedEvent &e : stats.top_events) events.push_back({{"word", e.word}, {"percent", e.percent}});
  body["top_events"] = events;
  OrderedJson tuples = OrderedJson::array();
  for (const RankedTuple &t : stats.top_tuples) {
    tuples.push_back({{"first", t.first},
                      {"second", t.second},
                      {"label", LabelName(t.label)},
                      {"percent", t.percent}});
  }
  body["top_tuples"] = tuples;
  body["mask"] = {{"mean_ratio", mask.mean}, {"max_ratio", mask.max}, {"histogram", mask.histogram}};

  std::ostringstream table;
  table << "examples: " << stats.n << "\n\nlabel distribution\n";
  for (Label l : kAllLabels) {
    table << "  " << LabelName(l) << "\t" << Percent(100.0 * stats.label_fractions[LabelIndex(l)])
          << "%\n";
  }
  table << "\ntop " << k << " events\n";
  for (const RankedEvent &e : stats.top_events) table << "  " << e.word << "\t" << Percent(e.percent) << "%\n";
  table << "\ntop " << k << " tuples\n";
  for (const RankedTuple &t : stats.top_tuples) {
    table << "  (" << t.first << ", " << t.second << ", " << LabelName(t.label) << ")\t"
          << Percent(t.percent) << "%\n";
  }
  table << "\nmask ratio: mean " << Percent(100.0 * mask.mean) << "%, max "
        << Percent(100.0 * mask.max) << "%\n";

  Run run("stats", ctx.settings, {{"examples", input}}, nullptr);
  run.Begin();
  run.WriteJson("stats.json", body);
  run.WriteText("stats.txt", table.str());
  run.Finish();
  ctx.out << table.str();
}

void Split(Context &ctx) {
  const fs::path &input = RequireOneInput(ctx.inputs, "examples");
  const Json &c = ctx.settings.config;
  const std::vector<LabeledExample> examples = ReadExamples(input);
  const auto [train, test] =
      SplitByDocument(examples, c["split"].get<double>(), c["seed"].get<uint64_t>());
  Run run("split", ctx.settings, {{"examples", input}}, c["seed"]);
  OrderedJson summary;
  summary["train"] = train.size();
  summary["test"] = test.size();
  run.SetSummary(summary);
  run.Begin();
  run.WriteJsonl("train.jsonl", ExampleLines(train));
  run.WriteJsonl("test.jsonl", ExampleLines(test));
  run.Finish();
  ctx.out << "split " << examples.size() << " examples: " << train.size() << " train, "
          << test.size() << " test\n";
}

void Sample(Context &ctx) {
  const fs::path &input = RequireOneInput(ctx.inputs, "examples");
  const Json &c = ctx.settings.config;
  const uint64_t seed = c["seed"].get<uint64_t>();
  std::vector<LabeledExample> examples = ReadExamples(input);
  if (!c["sources_cap"].is_null()) {
    examples = BalanceBySource(examples, c["sources_cap"].get<int>(), seed);
  }
  if (!c["size"].is_null()) {
    const int size = c["size"].get<int>();
    if (static_cast<size_t>(size) > examples.size()) {
      throw ValidationError("requested " + std::to_string(size) + " examples, only " +
                            std::to_string(examples.size()) + " available");
    }
    examples = Subsample(examples, size, seed);
  }
  Run run("sample", ctx.settings, {{"examples", input}}, c["seed"]);
  OrderedJson summary;
  summary["examples"] = examples.size();
  summary["labels"] = LabelCounts(examples);
  run.SetSummary(summary);
  run.Begin();
  run.WriteJsonl("sample.jsonl", ExampleLines(examples));
  run.Finish();
  ctx.out << "sampled " << examples.size() << " examples\n";
}

void TrainHead(Context &ctx) {
  const fs::path &input = RequireOneInput(ctx.inputs, "embeddings");
  if (ctx.settings.labels.empty()) throw ValidationError("train-head needs --labels");
  const Json &c = ctx.settings.config;
  const std::vector<EmbeddingPair> pairs = ReadEmbeddings(input);
  std::vector<std::string> ids;
  for (const EmbeddingPair &p : pairs) ids.push_back(p.example_id);
  const std::vector<Label> labels = AlignLabels(ids, LabelsById(ctx.settings.labels));
  const std::vector<uint64_t> seeds = SeedsFromConfig(c);

  std::vector<TrainResult> results;
  OrderedJson per_seed = OrderedJson::array();
  for (uint64_t seed : seeds) {
    TrainConfig config;
    config.lr = c["lr"].get<double>();
    config.epochs = c["epochs"].get<int>();
    config.l2 = c["l2"].get<double>();
    config.init_scale = c["init_scale"].get<double>();
    config.seed = seed;
    TrainResult result = Train(pairs, labels, config);
    std::vector<Label> predicted;
    for (const EmbeddingPair &p : pairs) predicted.push_back(Predict(result.head, p).label);
    const EvalReport train_report = Evaluate(predicted, labels);
    per_seed.push_back({{"seed", seed},
                        {"final_loss", result.loss_trace.back()},
                        {"train_accuracy", train_report.accuracy}});
    results.push_back(std::move(result));
  }

  Run run("train-head", ctx.settings, {{"embeddings", input}, {"labels", ctx.settings.labels}},
          OrderedJson::parse(Json(seeds).dump()));
  OrderedJson summary;
  summary["examples"] = pairs.size();
  summary["heads"] = per_seed;
  run.SetSummary(summary);
  run.Begin();
  OrderedJson log;
  OrderedJson traces = OrderedJson::array();
  for (size_t i = 0; i < seeds.size(); ++i) {
    run.WriteJson("head-" + std::to_string(seeds[i]) + ".json",
                  OrderedJson::parse(HeadToJson(results[i].head)));
    traces.push_back({{"seed", seeds[i]}, {"loss", results[i].loss_trace}});
  }
  log["loss_traces"] = traces;
  run.WriteJson("train_log.json", log);
  run.Finish();
  for (const auto &entry : per_seed) {
    ctx.out << "seed " << entry["seed"].get<uint64_t>() << ": final loss "
            << entry["final_loss"].get<double>() << ", train accuracy "
            << Percent(entry["train_accuracy"].get<double>()) << "%\n";
  }
}

void Eval(Context &ctx) {
  if (ctx.inputs.empty()) throw ValidationError("eval needs one or more head files as --input");
  if (ctx.settings.embeddings.empty()) throw ValidationError("eval needs --embeddings");
  if (ctx.settings.labels.empty()) throw ValidationError("eval needs --labels");
  const std::vector<EmbeddingPair> pairs = ReadEmbeddings(ctx.settings.embeddings);
  std::vector<std::string> ids;
  for (const EmbeddingPair &p : pairs) ids.push_back(p.example_id);
  const std::vector<Label> golds = AlignLabels(ids, LabelsById(ctx.settings.labels));

  std::vector<InputFile> files;
  std::vector<EvalReport> reports;
  std::vector<std::vector<std::string>> prediction_lines;
  OrderedJson heads = OrderedJson::array();
  std::string table = EvalTableHeader();
  for (size_t h = 0; h < ctx.inputs.size(); ++h) {
    files.push_back({"head", ctx.inputs[h]});
    const LinearHead head = HeadFromJson(ReadFile(ctx.inputs[h]));
    std::vector<Label> predicted;
    std::vector<std::string> lines;
    for (const EmbeddingPair &p : pairs) {
      const Prediction pred = Predict(head, p);
      predicted.push_back(pred.label);
      lines.push_back(PredictionToLine({p.example_id, pred.label, pred.probs}));
    }
    const EvalReport report = Evaluate(predicted, golds);
    reports.push_back(report);
    prediction_lines.push_back(std::move(lines));
    const std::string name = ctx.inputs[h].stem().string();
    OrderedJson entry = ReportJson(report);
    entry["head"] = name;
    heads.push_back(std::move(entry));
    table += EvalTableRow(name, report);
  }
  // Mean of the per-head scores.
  EvalReport avg;
  for (const EvalReport &r : reports) {
    avg.precision += r.precision / reports.size();
    avg.recall += r.recall / reports.size();
    avg.f1 += r.f1 / reports.size();
    avg.accuracy += r.accuracy / reports.size();
    avg.nonvague_accuracy += r.nonvague_accuracy / reports.size();
    avg.precision_undefined = avg.precision_undefined || r.precision_undefined;
  }
  avg.n = reports.front().n;
  table += EvalTableRow("avg", avg);

  files.push_back({"embeddings", ctx.settings.embeddings});
  files.push_back({"labels", ctx.settings.labels});
  Run run("eval", ctx.settings, files, nullptr);
  OrderedJson summary;
  summary["heads"] = heads;
  summary["avg"] = ReportJson(avg);
  run.SetSummary(summary);
  run.Begin();
  for (size_t h = 0; h < ctx.inputs.size(); ++h) {
    run.WriteJsonl("predictions-" + ctx.inputs[h].stem().string() + ".jsonl", prediction_lines[h]);
  }
  OrderedJson body;
  body["heads"] = heads;
  body["avg"] = ReportJson(avg);
  run.WriteJson("eval.json", body);
  run.WriteText("eval.txt", table);
  run.Finish();
  ctx.out << table;
}

void EnsembleCommand(Context &ctx) {
  if (ctx.inputs.empty()) throw ValidationError("ensemble needs prediction files as --input");
  std::vector<std::vector<PredictionRecord>> per_head;
  std::vector<InputFile> files;
  for (const fs::path &path : ctx.inputs) {
    per_head.push_back(ReadPredictions(path));
    files.push_back({"predictions", path});
  }
  const std::vector<PredictionRecord> merged = Ensemble(per_head);
  std::vector<std::string> lines;
  for (const PredictionRecord &r : merged) lines.push_back(PredictionToLine(r));

  std::optional<EvalReport> report;
  if (!ctx.settings.labels.empty()) {
    files.push_back({"labels", ctx.settings.labels});
    std::vector<std::string> ids;
    std::vector<Label> predicted;
    for (const PredictionRecord &r : merged) {
      ids.push_back(r.example_id);
      predicted.push_back(r.label);
    }
    report = Evaluate(predicted, AlignLabels(ids, LabelsById(ctx.settings.labels)));
  }
  Run run("ensemble", ctx.settings, files, nullptr);
  OrderedJson summary;
  summary["heads"] = per_head.size();
  summary["examples"] = merged.size();
  if (report) summary["ensemble"] = ReportJson(*report);
  run.SetSummary(summary);
  run.Begin();
  run.WriteJsonl("ensemble_predictions.jsonl", lines);
  if (report) {
    OrderedJson body;
    body["ensemble"] = ReportJson(*report);
    run.WriteJson("ensemble_eval.json", body);
    run.WriteText("ensemble_eval.txt", EvalTableHeader() + EvalTableRow("ensemble", *report));
    ctx.out << EvalTableHeader() << EvalTableRow("ensemble", *report);
  } else {
    ctx.out << "ensembled " << merged.size() << " predictions from " << per_head.size()
            << " heads\n";
  }
  run.Finish();
}

// Reads every run manifest in the given directories and links each input
// file to the run that produced it (by content hash).
void Report(Context &ctx) {
  if (ctx.inputs.empty()) throw ValidationError("report needs run directories as --input");
  const fs::path out_dir = ctx.settings.out;

  struct RunInfo {
    fs::path manifest_path;
    Json manifest;
  };
  std::vector<RunInfo> runs;
  std::vector<InputFile> files;
  for (const fs::path &dir : ctx.inputs) {
    if (!fs::is_directory(dir)) throw ValidationError(dir.string() + " is not a directory");
    std::vector<fs::path> manifests;
    for (const auto &entry : fs::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("manifest-", 0) == 0 && entry.path().extension() == ".json") {
        manifests.push_back(entry.path());
      }
    }
    std::sort(manifests.begin(), manifests.end());
    if (manifests.empty()) throw ValidationError("no run manifest in " + dir.string());
    for (const fs::path &path : manifests) {
      Json m;
      try {
        m = Json::parse(ReadFile(path));
      } catch (const Json::parse_error &e) {
        throw ValidationError(path.string() + ": " + e.what());
      }
      runs.push_back({path, std::move(m)});
      files.push_back({"manifest", path});
    }
  }

  // Output content hash -> "<run dir>/<file>" relative to the report.
  std::map<std::string, std::string> producer;
  for (const RunInfo &run : runs) {
    for (const Json &o : run.manifest.value("outputs", Json::array())) {
      const fs::path file = run.manifest_path.parent_path() / o.at("path").get<std::string>();
      producer.emplace(o.at("sha256").get<std::string>(), RelativePath(file, out_dir));
    }
  }

  OrderedJson chain = OrderedJson::array();
  std::ostringstream text;
  bool all_complete = true;
  for (const RunInfo &run : runs) {
    const Json &m = run.manifest;
    OrderedJson entry;
    entry["manifest"] = RelativePath(run.manifest_path, out_dir);
    entry["subcommand"] = m.value("subcommand", "");
    entry["status"] = m.value("status", "");
    entry["config_hash"] = m.value("config_hash", "");
    entry["seed"] = OrderedJson::parse(m.value("seed", Json()).dump());
    all_complete = all_complete && entry["status"] == "complete";
    text << entry["subcommand"].get<std::string>() << "  [" << entry["status"].get<std::string>()
         << "]  " << entry["manifest"].get<std::string>() << "\n";
    text << "  config " << entry["config_hash"].get<std::string>().substr(0, 16) << "  seed "
         << entry["seed"].dump() << "\n";
    OrderedJson inputs = OrderedJson::array();
    for (const Json &in : m.value("inputs", Json::array())) {
      OrderedJson i;
      i["role"] = in.value("role", "");
      i["sha256"] = in.value("sha256", "");
      const auto it = producer.find(i["sha256"].get<std::string>());
      i["produced_by"] = it == producer.end() ? OrderedJson(nullptr) : OrderedJson(it->second);
      text << "  <- " << i["role"].get<std::string>() << " "
           << i["sha256"].get<std::string>().substr(0, 16) << "  "
           << (it == producer.end() ? std::string("(external)") : it->second) << "\n";
      inputs.push_back(std::move(i));
    }
    entry["inputs"] = std::move(inputs);
    OrderedJson outputs = OrderedJson::array();
    for (const Json &o : m.value("outputs", Json::array())) {
      outputs.push_back({{"path", o.value("path", "")}, {"sha256", o.value("sha256", "")}});
      text << "  -> " << o.value("path", "") << " " << o.value("sha256", "").substr(0, 16) << "\n";
    }
    entry["outputs"] = std::move(outputs);
    if (m.contains("summary")) entry["summary"] = OrderedJson::parse(m["summary"].dump());
    chain.push_back(std::move(entry));
  }

  Run run("report", ctx.settings, files, nullptr);
  OrderedJson summary;
  summary["runs"] = runs.size();
  summary["all_complete"] = all_complete;
  run.SetSummary(summary);
  run.Begin();
  OrderedJson body;
  body["runs"] = chain;
  run.WriteJson("report.json", body);
  run.WriteText("report.txt", text.str());
  run.Finish();
  ctx.out << text.str();
}

void AddCommonFlags(CLI::App *sub, Flags &flags) {
  sub->add_option("--config", flags.config, "JSON configuration file; flags override it");
  sub->add_option("--input,-i", flags.inputs, "Input file(s) or run directories");
  sub->add_option("--out,-o", flags.out, "Output directory");
  sub->add_option("--heuristic", flags.heuristic, "beforeafter, distanttimex or both");
  sub->add_flag_callback("--mask", [&flags] { flags.mask = true, flags.mask_set = true; },
                         "Mask explicit temporal cues");
  sub->add_flag_callback("--no-mask", [&flags] { flags.mask = false, flags.mask_set = true; },
                         "Keep cue words visible");
  sub->add_option("--size", flags.size, "Number of examples to sample");
  sub->add_option("--seed", flags.seed, "Random seed");
  sub->add_option("--sources-cap", flags.sources_cap, "Maximum examples per news source");
  sub->add_option("--split", flags.split, "Fraction of documents in the train split");
  sub->add_option("--seeds", flags.seeds, "Comma-separated seeds, one head per seed");
  sub->add_option("--labels", flags.labels, "Example file supplying labels by example id");
  sub->add_option("--embeddings", flags.embeddings, "Embedding file");
  sub->add_option("--threads", flags.threads, "Worker threads (0: all cores)");
}

}  // namespace

int RunCommand(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"tempdistill: distantly supervised temporal relation data", "tempdistill"};
  app.require_subcommand(1);
  Flags flags;
  using Handler = void (*)(Context &);
  const std::vector<std::tuple<const char *, const char *, Handler>> commands = {
      {"ingest", "Validate and normalize document files", Ingest},
      {"extract", "Run the heuristics and emit labeled examples", Extract},
      {"mask", "Apply or remove cue masking on an example file", Mask},
      {"stats", "Label distribution, top events and tuples", Stats},
      {"split", "Split examples into train and test by document", Split},
      {"sample", "Balance by source and subsample examples", Sample},
      {"train-head", "Train the linear relation head, one per seed", TrainHead},
      {"eval", "Evaluate heads on labeled embeddings", Eval},
      {"ensemble", "Majority-vote several prediction files", EnsembleCommand},
      {"report", "Provenance chain across run directories", Report},
  };
  std::map<std::string, CLI::App *> subs;
  for (const auto &[name, help, handler] : commands) {
    CLI::App *sub = app.add_subcommand(name, help);
    AddCommonFlags(sub, flags);
    subs[name] = sub;
  }

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      subs.count(args.front()) == 0) {
    err << "tempdistill: unknown subcommand '" << args.front() << "'\n";
    return 2;
  }
  std::vector<const char *> argv = {"tempdistill"};
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  CLI::App *sub = app.get_subcommands().front();
  try {
    Context ctx{ResolveSettings(flags, *sub), {}, out};
    for (const std::string &in : ctx.settings.inputs) ctx.inputs.emplace_back(in);
    for (const auto &[name, help, handler] : commands) {
      if (sub->get_name() == name) handler(ctx);
    }
  } catch (const std::exception &e) {
    err << "tempdistill " << sub->get_name() << ": error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tempdistill::cli
