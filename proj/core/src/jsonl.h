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

#ifndef TEMPDISTILL_SRC_JSONL_H_
#define TEMPDISTILL_SRC_JSONL_H_

#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tempdistill/errors.h"

namespace tempdistill::internal {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Key of the provenance header line written ahead of records.
inline constexpr const char *kManifestKey = "_manifest";

inline Json ParseJsonLine(std::string_view line, int line_number) {
  try {
    return Json::parse(line);
  } catch (const Json::parse_error &e) {
    throw ParseError(line_number, std::string("invalid JSON: ") + e.what());
  }
}

inline bool IsManifestHeader(const Json &record) {
  return record.is_object() && record.size() == 1 && record.contains(kManifestKey);
}

inline bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

// Calls fn(line, line_number) for each record line, skipping blank lines and
// a manifest header on the first non-blank line.
template <typename Fn>
void ForEachRecordLine(std::istream &in, Fn &&fn) {
  std::string line;
  int line_number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    if (first) {
      first = false;
      if (line.find(kManifestKey) != std::string::npos &&
          IsManifestHeader(ParseJsonLine(line, line_number))) {
        continue;
      }
    }
    fn(std::string_view(line), line_number);
  }
}

class FieldReader {
 public:
  FieldReader(const Json &object, int line, std::string path = "")
      : object_(object), line_(line), path_(std::move(path)) {
    if (!object_.is_object()) Fail("", "expected an object");
  }

  const Json &Get(const char *name) const {
    auto it = object_.find(name);
    if (it == object_.end()) Fail(name, "missing");
    return *it;
  }
  bool Has(const char *name) const { return object_.contains(name); }

  std::string String(const char *name) const {
    const Json &v = Get(name);
    if (!v.is_string()) Fail(name, "expected a string");
    return v.get<std::string>();
  }
  int Int(const char *name) const {
    const Json &v = Get(name);
    if (!v.is_number_integer()) Fail(name, "expected an integer");
    return v.get<int>();
  }
  double Number(const char *name) const {
    const Json &v = Get(name);
    if (!v.is_number()) Fail(name, "expected a number");
    return v.get<double>();
  }
  const Json &Array(const char *name) const {
    const Json &v = Get(name);
    if (!v.is_array()) Fail(name, "expected an array");
    return v;
  }

  std::string Path(const std::string &name) const {
    return path_.empty() ? name : path_ + "." + name;
  }
  int line() const { return line_; }

  [[noreturn]] void Fail(const std::string &name, const std::string &what) const {
    throw ParseError(line_, "field '" + Path(name) + "': " + what);
  }

 private:
  const Json &object_;
  int line_;
  std::string path_;
};

}  // namespace tempdistill::internal

#endif  // TEMPDISTILL_SRC_JSONL_H_
