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

#include "tempdistill/timex.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "tempdistill/errors.h"
#include "tempdistill/util.h"

namespace tempdistill {

extern const char kBundledTimexRules[];

std::string_view TimexTypeName(TimexType type) {
  switch (type) {
    case TimexType::kDate: return "DATE";
    case TimexType::kTime: return "TIME";
    case TimexType::kDuration: return "DURATION";
    case TimexType::kSet: return "SET";
  }
  return "DATE";
}

std::optional<TimexType> ParseTimexType(std::string_view name) {
  if (name == "DATE") return TimexType::kDate;
  if (name == "TIME") return TimexType::kTime;
  if (name == "DURATION") return TimexType::kDuration;
  if (name == "SET") return TimexType::kSet;
  return std::nullopt;
}

std::string_view TimeKindName(TimeKind kind) {
  switch (kind) {
    case TimeKind::kCalendar: return "CALENDAR";
    case TimeKind::kPastRef: return "PAST_REF";
    case TimeKind::kPresentRef: return "PRESENT_REF";
    case TimeKind::kFutureRef: return "FUTURE_REF";
    case TimeKind::kUnresolved: return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

bool PartialDate::IsValid() const {
  if (year < 1) return false;
  if (!has_month()) return !has_day();
  if (month < 1 || month > 12) return false;
  return !has_day() || IsValidDate(year, month, day);
}

std::string PartialDate::ToString() const {
  char buffer[32];
  if (has_day()) {
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", year, month, day);
  } else if (has_month()) {
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d", year, month);
  } else {
    std::snprintf(buffer, sizeof(buffer), "%04d", year);
  }
  return buffer;
}

NormalizedTime NormalizedTime::Calendar(PartialDate date) {
  return {TimeKind::kCalendar, date};
}

bool NormalizedTime::IsDayResolution() const {
  if (kind == TimeKind::kPresentRef) return true;
  return kind == TimeKind::kCalendar && calendar && calendar->has_day();
}

std::string NormalizedTime::ToString() const {
  if (kind == TimeKind::kCalendar && calendar) return calendar->ToString();
  return std::string(TimeKindName(kind));
}

std::string_view TimeRelationName(TimeRelation rel) {
  switch (rel) {
    case TimeRelation::kBefore: return "BEFORE";
    case TimeRelation::kAfter: return "AFTER";
    case TimeRelation::kEqual: return "EQUAL";
    case TimeRelation::kIncomparable: return "INCOMPARABLE";
  }
  return "INCOMPARABLE";
}

TimeRelation Inverse(TimeRelation rel) {
  if (rel == TimeRelation::kBefore) return TimeRelation::kAfter;
  if (rel == TimeRelation::kAfter) return TimeRelation::kBefore;
  return rel;
}

std::optional<DayInterval> IntervalOf(const NormalizedTime &time,
                                      const std::optional<CivilDate> &dct) {
  switch (time.kind) {
    case TimeKind::kCalendar: {
      if (!time.calendar || !time.calendar->IsValid()) return std::nullopt;
      const PartialDate &p = *time.calendar;
      const int first_month = p.has_month() ? p.month : 1;
      const int last_month = p.has_month() ? p.month : 12;
      const int first_day = p.has_day() ? p.day : 1;
      const int last_day = p.has_day() ? p.day : DaysInMonth(p.year, last_month);
      return DayInterval{DayNumber({p.year, first_month, first_day}),
                         DayNumber({p.year, last_month, last_day})};
    }
    case TimeKind::kPresentRef:
      if (!dct) return std::nullopt;
      return DayInterval{DayNumber(*dct), DayNumber(*dct)};
    case TimeKind::kPastRef:
      if (!dct) return std::nullopt;
      return DayInterval{DayInterval::kUnboundedBelow, DayNumber(*dct) - 1};
    case TimeKind::kFutureRef:
      if (!dct) return std::nullopt;
      return DayInterval{DayNumber(*dct) + 1, DayInterval::kUnboundedAbove};
    case TimeKind::kUnresolved:
      return std::nullopt;
  }
  return std::nullopt;
}

TimeRelation CompareIntervals(const DayInterval &a, const DayInterval &b) {
  if (a.last < b.first) return TimeRelation::kBefore;
  if (a.first > b.last) return TimeRelation::kAfter;
  if (a == b && a.bounded()) return TimeRelation::kEqual;
  return TimeRelation::kIncomparable;
}

namespace {

bool IsReference(TimeKind kind) {
  return kind == TimeKind::kPastRef || kind == TimeKind::kPresentRef ||
         kind == TimeKind::kFutureRef;
}

int ReferenceRank(TimeKind kind) {
  return kind == TimeKind::kPastRef ? 0 : kind == TimeKind::kPresentRef ? 1 : 2;
}

}  // namespace

TimeRelation CompareTimes(const NormalizedTime &a, const NormalizedTime &b,
                          const std::optional<CivilDate> &dct) {
  if (a.kind == TimeKind::kUnresolved || b.kind == TimeKind::kUnresolved) {
    return TimeRelation::kIncomparable;
  }
  const auto ia = IntervalOf(a, dct);
  const auto ib = IntervalOf(b, dct);
  if (ia && ib) return CompareIntervals(*ia, *ib);
  // Without a creation time only the reference words order among themselves.
  if (IsReference(a.kind) && IsReference(b.kind)) {
    const int ra = ReferenceRank(a.kind);
    const int rb = ReferenceRank(b.kind);
    if (ra < rb) return TimeRelation::kBefore;
    if (ra > rb) return TimeRelation::kAfter;
    if (a.kind == TimeKind::kPresentRef) return TimeRelation::kEqual;
  }
  return TimeRelation::kIncomparable;
}

// ---------------------------------------------------------------------------
// Rule table

namespace {

using Element = TimexRules::Element;
using Template = TimexRules::Template;

std::string Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string piece;
  while (in >> piece) out.push_back(piece);
  return out;
}

std::optional<Element::Kind> ClassKind(std::string_view name) {
  static const std::array<std::pair<std::string_view, Element::Kind>, 8> kClasses = {{
      {"YEAR", Element::Kind::kYear},
      {"MONTH", Element::Kind::kMonth},
      {"DAY", Element::Kind::kDay},
      {"WEEKDAY", Element::Kind::kWeekday},
      {"NUM", Element::Kind::kNum},
      {"UNIT", Element::Kind::kUnit},
      {"ISODATE", Element::Kind::kIsoDate},
      {"SLASHDATE", Element::Kind::kSlashDate},
  }};
  for (const auto &[n, k] : kClasses) {
    if (n == name) return k;
  }
  return std::nullopt;
}

struct TemplateSpec {
  std::string_view name;
  Template::Kind kind;
  std::vector<Element::Kind> arg_classes;
};

const std::vector<TemplateSpec> &TemplateSpecs() {
  using K = Element::Kind;
  static const std::vector<TemplateSpec> kSpecs = {
      {"y", Template::Kind::kYear, {K::kYear}},
      {"ym", Template::Kind::kYearMonth, {K::kYear, K::kMonth}},
      {"ymd", Template::Kind::kYearMonthDay, {K::kYear, K::kMonth, K::kDay}},
      {"md", Template::Kind::kMonthDay, {K::kMonth, K::kDay}},
      {"m", Template::Kind::kMonth, {K::kMonth}},
      {"iso", Template::Kind::kIso, {K::kIsoDate}},
      {"slash", Template::Kind::kSlash, {K::kSlashDate}},
      {"weekday", Template::Kind::kWeekday, {K::kWeekday}},
      {"past", Template::Kind::kPast, {}},
      {"present", Template::Kind::kPresent, {}},
      {"future", Template::Kind::kFuture, {}},
      {"unresolved", Template::Kind::kUnresolved, {}},
  };
  return kSpecs;
}

bool ParseInt(std::string_view s, int &value) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Template ParseTemplate(const std::string &text, const std::vector<Element> &pattern, int line) {
  const size_t open = text.find('(');
  const std::string name = Trim(text.substr(0, open));
  std::vector<std::string> args;
  if (open != std::string::npos) {
    const size_t close = text.rfind(')');
    if (close == std::string::npos || close < open || !Trim(text.substr(close + 1)).empty()) {
      throw ParseError(line, "template '" + text + "': unbalanced parentheses");
    }
    std::string inner = text.substr(open + 1, close - open - 1);
    std::istringstream in(inner);
    std::string arg;
    while (std::getline(in, arg, ',')) args.push_back(Trim(arg));
  }

  Template out;
  if (name == "rel") {
    int offset = 0;
    if (args.size() != 1 || !ParseInt(args[0], offset)) {
      throw ParseError(line, "template 'rel' takes one integer day offset");
    }
    out.kind = Template::Kind::kRelative;
    out.args = {offset};
    return out;
  }
  for (const TemplateSpec &spec : TemplateSpecs()) {
    if (spec.name != name) continue;
    if (args.size() != spec.arg_classes.size()) {
      throw ParseError(line, "template '" + name + "' takes " +
                                 std::to_string(spec.arg_classes.size()) + " argument(s)");
    }
    out.kind = spec.kind;
    for (size_t i = 0; i < args.size(); ++i) {
      int ref = 0;
      if (args[i].size() < 2 || args[i][0] != '$' || !ParseInt(args[i].substr(1), ref) ||
          ref < 1 || ref > static_cast<int>(pattern.size())) {
        throw ParseError(line, "template '" + name + "': bad reference '" + args[i] + "'");
      }
      if (pattern[ref - 1].kind != spec.arg_classes[i]) {
        throw ParseError(line, "template '" + name + "': $" + std::to_string(ref) +
                                   " has the wrong token class");
      }
      out.args.push_back(ref - 1);
    }
    return out;
  }
  throw ParseError(line, "unknown template '" + name + "'");
}

}  // namespace

TimexRules TimexRules::Parse(std::string_view text) {
  TimexRules rules;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    const std::string content = Trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    if (content.rfind("version", 0) == 0 && content.find("->") == std::string::npos) {
      const std::vector<std::string> parts = SplitWhitespace(content);
      int version = 0;
      if (parts.size() != 2 || !ParseInt(parts[1], version) || version < 1) {
        throw ParseError(line, "expected 'version N'");
      }
      if (rules.version_ != 0) throw ParseError(line, "duplicate version line");
      rules.version_ = version;
      continue;
    }
    if (rules.version_ == 0) throw ParseError(line, "rules must follow a 'version N' line");

    size_t arrow = content.find("->");
    size_t arrow_len = 2;
    if (arrow == std::string::npos) {
      arrow = content.find("\xE2\x86\x92");  // U+2192
      arrow_len = 3;
    }
    if (arrow == std::string::npos) throw ParseError(line, "expected 'PATTERN -> TTYPE, TEMPLATE'");

    Rule rule;
    rule.line = line;
    for (const std::string &piece : SplitWhitespace(content.substr(0, arrow))) {
      Element element;
      if (piece.size() > 2 && piece.front() == '<' && piece.back() == '>') {
        const auto kind = ClassKind(piece.substr(1, piece.size() - 2));
        if (!kind) throw ParseError(line, "unknown token class " + piece);
        element.kind = *kind;
      } else {
        element.kind = Element::Kind::kWord;
        element.word = ToLower(piece);
      }
      rule.pattern.push_back(std::move(element));
    }
    if (rule.pattern.empty()) throw ParseError(line, "empty pattern");

    const std::string rhs = content.substr(arrow + arrow_len);
    const size_t comma = rhs.find(',');
    if (comma == std::string::npos) throw ParseError(line, "expected 'TTYPE, TEMPLATE'");
    const auto ttype = ParseTimexType(Trim(rhs.substr(0, comma)));
    if (!ttype) throw ParseError(line, "unknown timex type '" + Trim(rhs.substr(0, comma)) + "'");
    rule.ttype = *ttype;
    rule.normalization = ParseTemplate(Trim(rhs.substr(comma + 1)), rule.pattern, line);
    rules.rules_.push_back(std::move(rule));
  }
  if (rules.version_ == 0) throw ParseError(line, "missing 'version N' line");
  return rules;
}

TimexRules TimexRules::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

const TimexRules &TimexRules::Default() {
  static const TimexRules kRules = Parse(kBundledTimexRules);
  return kRules;
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

int MonthNumber(std::string_view text) {
  static const std::array<std::string_view, 12> kFull = {
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december"};
  static const std::array<std::pair<std::string_view, int>, 12> kAbbrev = {{
      {"jan", 1}, {"feb", 2}, {"mar", 3}, {"apr", 4}, {"jun", 6}, {"jul", 7},
      {"aug", 8}, {"sep", 9}, {"sept", 9}, {"oct", 10}, {"nov", 11}, {"dec", 12}}};
  std::string lower = ToLower(text);
  for (int m = 0; m < 12; ++m) {
    if (lower == kFull[m]) return m + 1;
  }
  if (!lower.empty() && lower.back() == '.') lower.pop_back();
  for (const auto &[abbrev, m] : kAbbrev) {
    if (lower == abbrev) return m;
  }
  return 0;
}

int WeekdayNumber(std::string_view text) {
  static const std::array<std::string_view, 7> kNames = {
      "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};
  const std::string lower = ToLower(text);
  for (int d = 0; d < 7; ++d) {
    if (lower == kNames[d]) return d;
  }
  return -1;
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool Capitalized(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

int YearValue(std::string_view text) {
  int value = 0;
  if (text.size() != 4 || !AllDigits(text) || !ParseInt(text, value)) return 0;
  return value >= 1000 && value <= 2999 ? value : 0;
}

int DayValue(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() > 2) {
    const std::string suffix = ToLower(digits.substr(digits.size() - 2));
    if (suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th") {
      digits.remove_suffix(2);
    }
  }
  int value = 0;
  if (digits.empty() || digits.size() > 2 || !AllDigits(digits) || !ParseInt(digits, value)) {
    return 0;
  }
  return value >= 1 && value <= 31 ? value : 0;
}

bool IsNumber(std::string_view text) {
  static const std::array<std::string_view, 32> kWords = {
      "one",     "two",      "three",    "four",    "five",    "six",     "seven",
      "eight",   "nine",     "ten",      "eleven",  "twelve",  "thirteen", "fourteen",
      "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen", "twenty", "thirty",
      "forty",   "fifty",    "sixty",    "seventy", "eighty",  "ninety",  "hundred",
      "few",     "several",  "dozen",    "a"};
  if (AllDigits(text)) return true;
  const std::string lower = ToLower(text);
  for (std::string_view w : kWords) {
    if (w != "a" && lower == w) return true;
  }
  return false;
}

bool IsUnit(std::string_view text) {
  static const std::array<std::string_view, 17> kUnits = {
      "second", "seconds", "minute", "minutes", "hour",   "hours",  "day",   "days",     "week",
      "weeks",  "month",   "months", "year",    "years",  "decade", "decades", "century"};
  const std::string lower = ToLower(text);
  if (lower == "centuries") return true;
  for (std::string_view u : kUnits) {
    if (lower == u) return true;
  }
  return false;
}

std::optional<CivilDate> SlashDate(std::string_view text) {
  const size_t a = text.find('/');
  const size_t b = text.find('/', a == std::string_view::npos ? a : a + 1);
  if (a == std::string_view::npos || b == std::string_view::npos) return std::nullopt;
  const std::string_view m = text.substr(0, a);
  const std::string_view d = text.substr(a + 1, b - a - 1);
  const std::string_view y = text.substr(b + 1);
  if (m.empty() || m.size() > 2 || d.empty() || d.size() > 2 || y.size() != 4) return std::nullopt;
  if (!AllDigits(m) || !AllDigits(d) || !AllDigits(y)) return std::nullopt;
  int mm = 0, dd = 0, yy = 0;
  ParseInt(m, mm);
  ParseInt(d, dd);
  ParseInt(y, yy);
  if (!IsValidDate(yy, mm, dd)) return std::nullopt;
  return CivilDate{yy, mm, dd};
}

bool Matches(const Element &element, const Token &tok) {
  switch (element.kind) {
    case Element::Kind::kWord: return ToLower(tok.text) == element.word;
    case Element::Kind::kYear: return YearValue(tok.text) != 0;
    case Element::Kind::kMonth:
      return MonthNumber(tok.text) != 0 && Capitalized(tok.text) && tok.pos.rfind("NN", 0) == 0;
    case Element::Kind::kDay: return DayValue(tok.text) != 0;
    case Element::Kind::kWeekday: return WeekdayNumber(tok.text) >= 0 && Capitalized(tok.text);
    case Element::Kind::kNum: return IsNumber(tok.text);
    case Element::Kind::kUnit: return IsUnit(tok.text);
    case Element::Kind::kIsoDate: return ParseIsoDate(tok.text).has_value();
    case Element::Kind::kSlashDate: return SlashDate(tok.text).has_value();
  }
  return false;
}

enum class Tense { kUnknown, kPast, kFuture };

Tense SentenceTense(const Sentence &sentence) {
  bool past = false;
  bool future = false;
  for (const Token &tok : sentence.tokens) {
    if (tok.pos == "VBD") past = true;
    if (tok.pos == "MD") {
      const std::string lower = ToLower(tok.text);
      if (lower == "will" || lower == "'ll" || lower == "shall" || lower == "wo") future = true;
    }
  }
  if (past == future) return Tense::kUnknown;
  return past ? Tense::kPast : Tense::kFuture;
}

NormalizedTime DayValueOf(int64_t day_number) {
  const CivilDate date = DateFromDayNumber(day_number);
  return NormalizedTime::Calendar({date.year, date.month, date.day});
}

// nullopt when the matched tokens do not normalize (the rule is skipped).
std::optional<NormalizedTime> Normalize(const Template &tmpl, const Sentence &sentence,
                                        int start, const std::optional<CivilDate> &dct) {
  auto text = [&](int arg) -> const std::string & {
    return sentence.tokens[start + tmpl.args[arg]].text;
  };
  auto checked = [](PartialDate p) -> std::optional<NormalizedTime> {
    if (!p.IsValid()) return std::nullopt;
    return NormalizedTime::Calendar(p);
  };
  switch (tmpl.kind) {
    case Template::Kind::kYear:
      return checked({YearValue(text(0)), 0, 0});
    case Template::Kind::kYearMonth:
      return checked({YearValue(text(0)), MonthNumber(text(1)), 0});
    case Template::Kind::kYearMonthDay:
      return checked({YearValue(text(0)), MonthNumber(text(1)), DayValue(text(2))});
    case Template::Kind::kMonthDay: {
      const PartialDate p{dct ? dct->year : 2000, MonthNumber(text(0)), DayValue(text(1))};
      // Feb 29 is checked against a leap year when the year is unknown.
      if (!p.IsValid()) return std::nullopt;
      if (!dct) return NormalizedTime::Unresolved();
      return NormalizedTime::Calendar(p);
    }
    case Template::Kind::kMonth:
      if (!dct) return NormalizedTime::Unresolved();
      return checked({dct->year, MonthNumber(text(0)), 0});
    case Template::Kind::kIso: {
      const auto d = ParseIsoDate(text(0));
      if (!d) return std::nullopt;
      return NormalizedTime::Calendar({d->year, d->month, d->day});
    }
    case Template::Kind::kSlash: {
      const auto d = SlashDate(text(0));
      if (!d) return std::nullopt;
      return NormalizedTime::Calendar({d->year, d->month, d->day});
    }
    case Template::Kind::kWeekday: {
      if (!dct) return NormalizedTime::Unresolved();
      const Tense tense = SentenceTense(sentence);
      if (tense == Tense::kUnknown) return NormalizedTime::Unresolved();
      const int target = WeekdayNumber(text(0));
      const int64_t base = DayNumber(*dct);
      const int step = tense == Tense::kPast ? -1 : 1;
      for (int k = 0; k <= 6; ++k) {
        if (Weekday(base + step * k) == target) return DayValueOf(base + step * k);
      }
      return NormalizedTime::Unresolved();
    }
    case Template::Kind::kRelative: {
      const int offset = tmpl.args[0];
      if (dct) return DayValueOf(DayNumber(*dct) + offset);
      if (offset < 0) return NormalizedTime::Past();
      if (offset > 0) return NormalizedTime::Future();
      return NormalizedTime::Present();
    }
    case Template::Kind::kPast: return NormalizedTime::Past();
    case Template::Kind::kPresent: return NormalizedTime::Present();
    case Template::Kind::kFuture: return NormalizedTime::Future();
    case Template::Kind::kUnresolved: return NormalizedTime::Unresolved();
  }
  return std::nullopt;
}

}  // namespace

std::vector<TimexSpan> DetectTimexes(const Document &doc, const TimexRules &rules) {
  std::vector<TimexSpan> spans;
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &sentence = doc.sentences[s];
    const int n = sentence.size();
    int i = 0;
    while (i < n) {
      const TimexRules::Rule *best = nullptr;
      NormalizedTime best_value;
      int best_len = 0;
      for (const TimexRules::Rule &rule : rules.rules()) {
        const int len = static_cast<int>(rule.pattern.size());
        if (len <= best_len || i + len > n) continue;
        bool ok = true;
        for (int k = 0; k < len && ok; ++k) ok = Matches(rule.pattern[k], sentence.tokens[i + k]);
        if (!ok) continue;
        const auto value = Normalize(rule.normalization, sentence, i, doc.dct);
        if (!value) continue;
        best = &rule;
        best_value = *value;
        best_len = len;
      }
      if (best == nullptr) {
        ++i;
        continue;
      }
      TimexSpan span;
      span.tid = "t" + std::to_string(spans.size() + 1);
      span.sent = s;
      span.start = i;
      span.end = i + best_len;
      span.ttype = best->ttype;
      span.value = best_value;
      spans.push_back(std::move(span));
      i += best_len;
    }
  }
  return spans;
}

}  // namespace tempdistill
