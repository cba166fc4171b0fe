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

#ifndef TEMPDISTILL_TIMEX_H_
#define TEMPDISTILL_TIMEX_H_

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempdistill/calendar.h"
#include "tempdistill/corpus.h"

namespace tempdistill {

enum class TimexType { kDate, kTime, kDuration, kSet };

enum class TimeKind { kCalendar, kPastRef, kPresentRef, kFutureRef, kUnresolved };

std::string_view TimexTypeName(TimexType type);
std::optional<TimexType> ParseTimexType(std::string_view name);
std::string_view TimeKindName(TimeKind kind);

// A date known to year, month or day precision. Month and day are 0 when
// unspecified.
struct PartialDate {
  int year = 0;
  int month = 0;
  int day = 0;

  bool has_month() const { return month != 0; }
  bool has_day() const { return day != 0; }
  bool IsValid() const;
  std::string ToString() const;  // "1951", "1951-03", "1951-03-04"

  friend bool operator==(const PartialDate &, const PartialDate &) = default;
};

struct NormalizedTime {
  TimeKind kind = TimeKind::kUnresolved;
  std::optional<PartialDate> calendar;  // present iff kind == kCalendar

  static NormalizedTime Calendar(PartialDate date);
  static NormalizedTime Past() { return {TimeKind::kPastRef, std::nullopt}; }
  static NormalizedTime Present() { return {TimeKind::kPresentRef, std::nullopt}; }
  static NormalizedTime Future() { return {TimeKind::kFutureRef, std::nullopt}; }
  static NormalizedTime Unresolved() { return {TimeKind::kUnresolved, std::nullopt}; }

  // True for calendar days and for the present reference, which both denote
  // a single day.
  bool IsDayResolution() const;
  std::string ToString() const;

  friend bool operator==(const NormalizedTime &, const NormalizedTime &) = default;
};

struct TimexSpan {
  std::string tid;
  int sent = 0;
  int start = 0;  // inclusive
  int end = 0;    // exclusive
  TimexType ttype = TimexType::kDate;
  NormalizedTime value;

  int head() const { return end - 1; }
  bool Contains(int sentence, int token) const {
    return sentence == sent && token >= start && token < end;
  }

  friend bool operator==(const TimexSpan &, const TimexSpan &) = default;
};

// Closed day-number interval; the unbounded sentinels stand for open ends.
struct DayInterval {
  static constexpr int64_t kUnboundedBelow = std::numeric_limits<int64_t>::min();
  static constexpr int64_t kUnboundedAbove = std::numeric_limits<int64_t>::max();

  int64_t first = 0;
  int64_t last = 0;

  bool bounded() const {
    return first != kUnboundedBelow && last != kUnboundedAbove;
  }
  friend bool operator==(const DayInterval &, const DayInterval &) = default;
};

enum class TimeRelation { kBefore, kAfter, kEqual, kIncomparable };

std::string_view TimeRelationName(TimeRelation rel);
TimeRelation Inverse(TimeRelation rel);

// Calendar values map to the days they span. With a creation time, the
// present reference is that day, the past reference everything before it and
// the future reference everything after it. Otherwise nullopt.
std::optional<DayInterval> IntervalOf(const NormalizedTime &time,
                                      const std::optional<CivilDate> &dct);

// Strict precedence between intervals; EQUAL only for identical bounded
// intervals, anything else overlapping is incomparable.
TimeRelation CompareIntervals(const DayInterval &a, const DayInterval &b);

TimeRelation CompareTimes(const NormalizedTime &a, const NormalizedTime &b,
                          const std::optional<CivilDate> &dct);

// A compiled rule table. See data/timex_rules.txt for the grammar.
class TimexRules {
 public:
  // Throws ParseError naming the offending line.
  static TimexRules Parse(std::string_view text);
  static TimexRules Load(const std::filesystem::path &path);
  // The rule table bundled with the library.
  static const TimexRules &Default();

  int version() const { return version_; }
  int size() const { return static_cast<int>(rules_.size()); }

  struct Element {
    enum class Kind { kWord, kYear, kMonth, kDay, kWeekday, kNum, kUnit, kIsoDate, kSlashDate };
    Kind kind = Kind::kWord;
    std::string word;  // lowercased, for kWord
  };
  struct Template {
    enum class Kind { kYear, kYearMonth, kYearMonthDay, kMonthDay, kMonth, kIso, kSlash,
                      kWeekday, kRelative, kPast, kPresent, kFuture, kUnresolved };
    Kind kind = Kind::kUnresolved;
    std::vector<int> args;  // 0-based element positions, or the day offset
  };
  struct Rule {
    std::vector<Element> pattern;
    TimexType ttype = TimexType::kDate;
    Template normalization;
    int line = 0;
  };

  const std::vector<Rule> &rules() const { return rules_; }

 private:
  int version_ = 0;
  std::vector<Rule> rules_;
};

// Non-overlapping spans in document order, with tids t1, t2, ... (t0 names
// the document creation time and is never emitted here).
std::vector<TimexSpan> DetectTimexes(const Document &doc,
                                     const TimexRules &rules = TimexRules::Default());

}  // namespace tempdistill

#endif  // TEMPDISTILL_TIMEX_H_
