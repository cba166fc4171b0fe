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

#ifndef TEMPDISTILL_LABELS_H_
#define TEMPDISTILL_LABELS_H_

#include <array>
#include <optional>
#include <string_view>

namespace tempdistill {

// The four relation labels. The numeric order is part of the head
// serialization contract.
enum class Label { kBefore = 0, kAfter = 1, kEqual = 2, kVague = 3 };

inline constexpr int kNumLabels = 4;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kBefore, Label::kAfter, Label::kEqual, Label::kVague};

std::string_view LabelName(Label label);  // "BEFORE", ...
// Accepts upper or lower case; "equals" is an alias of EQUAL.
std::optional<Label> ParseLabel(std::string_view name);

inline int LabelIndex(Label label) { return static_cast<int>(label); }
inline Label LabelAt(int index) { return static_cast<Label>(index); }

// BEFORE <-> AFTER; EQUAL and VAGUE are symmetric.
Label Flip(Label label);

}  // namespace tempdistill

#endif  // TEMPDISTILL_LABELS_H_
