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

#ifndef TEMPDISTILL_CALENDAR_H_
#define TEMPDISTILL_CALENDAR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tempdistill {

// A proleptic Gregorian calendar date.
struct CivilDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  friend bool operator==(const CivilDate &, const CivilDate &) = default;
};

bool IsLeapYear(int year);
int DaysInMonth(int year, int month);
bool IsValidDate(int year, int month, int day);

// Days since 1970-01-01.
int64_t DayNumber(const CivilDate &date);
CivilDate DateFromDayNumber(int64_t days);

// 0 = Monday ... 6 = Sunday.
int Weekday(int64_t day_number);

// Strict YYYY-MM-DD. Returns nullopt on bad syntax or calendar bounds.
std::optional<CivilDate> ParseIsoDate(std::string_view text);
std::string FormatIsoDate(const CivilDate &date);

}  // namespace tempdistill

#endif  // TEMPDISTILL_CALENDAR_H_
