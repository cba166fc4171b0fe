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

#ifndef TEMPDISTILL_UTIL_H_
#define TEMPDISTILL_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tempdistill {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::filesystem::path &path);

// Seeded generator with platform-independent draws. The standard
// distributions are implementation-defined, so bounded draws are done here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, n). n must be positive.
  uint64_t UniformIndex(uint64_t n);
  // Uniform in [0, 1).
  double UniformDouble();

  template <typename T>
  void Shuffle(std::vector<T> &items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformIndex(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Joins tokens into text with PTB spacing conventions: no space before
// closing punctuation and clitics, none after openers, `` and '' rendered
// as double quotes.
std::string RenderText(std::span<const std::string> tokens);

std::string ToLower(std::string_view text);

// Reads a whole file. Throws Error when it cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

}  // namespace tempdistill

#endif  // TEMPDISTILL_UTIL_H_
