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

#ifndef TEMPDISTILL_TOOLS_CLI_H_
#define TEMPDISTILL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tempdistill::cli {

// Runs one invocation of the command-line tool. `args` excludes the program
// name, e.g. {"extract", "--input", "docs.jsonl", "--out", "run/extract"}.
// Returns the process exit status: 0 when every requested artifact was
// written, nonzero otherwise with a message on `err`.
int RunCommand(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace tempdistill::cli

#endif  // TEMPDISTILL_TOOLS_CLI_H_
