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

#include "tempdistill/labels.h"

#include "tempdistill/util.h"

namespace tempdistill {

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kBefore: return "BEFORE";
    case Label::kAfter: return "AFTER";
    case Label::kEqual: return "EQUAL";
    case Label::kVague: return "VAGUE";
  }
  return "VAGUE";
}

std::optional<Label> ParseLabel(std::string_view name) {
  const std::string lower = ToLower(name);
  if (lower == "before") return Label::kBefore;
  if (lower == "after") return Label::kAfter;
  if (lower == "equal" || lower == "equals") return Label::kEqual;
  if (lower == "vague") return Label::kVague;
  return std::nullopt;
}

Label Flip(Label label) {
  if (label == Label::kBefore) return Label::kAfter;
  if (label == Label::kAfter) return Label::kBefore;
  return label;
}

}  // namespace tempdistill
