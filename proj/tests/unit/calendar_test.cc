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

#include "tempdistill/calendar.h"

#include <gtest/gtest.h>

namespace tempdistill {
namespace {

TEST(CalendarTest, LeapYears) {
  EXPECT_TRUE(IsLeapYear(2000));
  EXPECT_TRUE(IsLeapYear(2004));
  EXPECT_FALSE(IsLeapYear(1900));
  EXPECT_FALSE(IsLeapYear(2001));
}

TEST(CalendarTest, DaysInMonth) {
  EXPECT_EQ(DaysInMonth(2000, 2), 29);
  EXPECT_EQ(DaysInMonth(2001, 2), 28);
  EXPECT_EQ(DaysInMonth(2001, 4), 30);
  EXPECT_EQ(DaysInMonth(2001, 12), 31);
}

TEST(CalendarTest, Validity) {
  EXPECT_TRUE(IsValidDate(2000, 2, 29));
  EXPECT_FALSE(IsValidDate(2001, 2, 29));
  EXPECT_FALSE(IsValidDate(2001, 13, 1));
  EXPECT_FALSE(IsValidDate(2001, 1, 0));
}

TEST(CalendarTest, DayNumberRoundTrip) {
  EXPECT_EQ(DayNumber({1970, 1, 1}), 0);
  EXPECT_EQ(DayNumber({1970, 1, 2}), 1);
  for (int64_t n = -800000; n <= 800000; n += 997) {
    EXPECT_EQ(DayNumber(DateFromDayNumber(n)), n);
  }
}

TEST(CalendarTest, Weekday) {
  // 1990-01-01 was a Monday and 2000-01-01 a Saturday (0 = Monday).
  EXPECT_EQ(Weekday(DayNumber({1990, 1, 1})), 0);
  EXPECT_EQ(Weekday(DayNumber({2000, 1, 1})), 5);
}

TEST(CalendarTest, IsoParsing) {
  const auto d = ParseIsoDate("2013-05-07");
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (CivilDate{2013, 5, 7}));
  EXPECT_EQ(FormatIsoDate(*d), "2013-05-07");
  EXPECT_FALSE(ParseIsoDate("2013-02-30").has_value());
  EXPECT_FALSE(ParseIsoDate("2013-5-7").has_value());
  EXPECT_FALSE(ParseIsoDate("not a date").has_value());
}

}  // namespace
}  // namespace tempdistill
