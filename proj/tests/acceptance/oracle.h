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

#ifndef TEMPDISTILL_TESTS_ACCEPTANCE_ORACLE_H_
#define TEMPDISTILL_TESTS_ACCEPTANCE_ORACLE_H_

#include <string>
#include <tuple>
#include <vector>

#include "tempdistill/corpus.h"
#include "tempdistill/labels.h"
#include "tempdistill/util.h"

namespace tempdistill::testing {

// (sent1, token1, sent2, token2, label), events in text order.
using PairTuple = std::tuple<int, int, int, int, Label>;

struct OracleInstance {
  Document doc;
  int num_events = 0;
  int num_timexes = 0;
  // Pairs whose relation holds in every assignment of days consistent with
  // the document, computed by enumeration.
  std::vector<PairTuple> expected;
  // Human-readable description of the generated meaning of each timex.
  std::string description;
};

// Builds a random document of at most five clauses over a bounded date grid
// and solves it by brute force. The generator keeps its own table of what
// each surface form means and its own day arithmetic.
OracleInstance GenerateOracleInstance(Rng &rng);

}  // namespace tempdistill::testing

#endif  // TEMPDISTILL_TESTS_ACCEPTANCE_ORACLE_H_
