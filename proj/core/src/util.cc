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

#include "tempdistill/util.h"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "tempdistill/errors.h"

namespace tempdistill {

namespace {

std::string HexDigest(const unsigned char *digest, unsigned int size) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(size * 2);
  for (unsigned int i = 0; i < size; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  return HexDigest(digest, size);
}

std::string Sha256File(const std::filesystem::path &path) {
  return Sha256Hex(ReadFile(path));
}

uint64_t Rng::UniformIndex(uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::UniformDouble() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::string RenderText(std::span<const std::string> tokens) {
  static const std::unordered_set<std::string> kNoSpaceBefore = {
      ",", ".", ";", ":", "!", "?", "%", ")", "]", "}", "''", "'s", "'S",
      "n't", "N'T", "'m", "'re", "'ve", "'d", "'ll", "-RRB-", "-RSB-", "-RCB-"};
  static const std::unordered_set<std::string> kNoSpaceAfter = {
      "(", "[", "{", "$", "``", "-LRB-", "-LSB-", "-LCB-"};
  std::string out;
  bool suppress_next = true;
  for (const std::string &token : tokens) {
    if (!suppress_next && !kNoSpaceBefore.contains(token)) out.push_back(' ');
    if (token == "``" || token == "''") {
      out.push_back('"');
    } else if (token == "-LRB-") {
      out.push_back('(');
    } else if (token == "-RRB-") {
      out.push_back(')');
    } else {
      out += token;
    }
    suppress_next = kNoSpaceAfter.contains(token);
  }
  return out;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tempdistill
