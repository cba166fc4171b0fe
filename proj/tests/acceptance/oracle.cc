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

#include "oracle.h"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <sstream>

namespace tempdistill::testing {
namespace {

constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min() / 4;
constexpr int64_t kPosInf = std::numeric_limits<int64_t>::max() / 4;

// Day count since 1990-01-01 (a Monday), by plain iteration.
bool Leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }
int MonthLength(int y, int m) {
  static const int kLen[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && Leap(y) ? 29 : kLen[m - 1];
}
int64_t Day(int y, int m, int d) {
  int64_t n = 0;
  for (int yy = 1990; yy < y; ++yy) n += Leap(yy) ? 366 : 365;
  for (int mm = 1; mm < m; ++mm) n += MonthLength(y, mm);
  return n + d - 1;
}
struct Ymd {
  int y, m, d;
};
Ymd FromDay(int64_t n) {
  int y = 1990;
  while (n >= (Leap(y) ? 366 : 365)) n -= Leap(y++) ? 366 : 365;
  int m = 1;
  while (n >= MonthLength(y, m)) n -= MonthLength(y, m++);
  return {y, m, static_cast<int>(n) + 1};
}
int WeekdayOf(int64_t n) { return static_cast<int>(n % 7); }  // 0 = Monday

const char *kMonthNames[] = {"January", "February", "March",     "April",   "May",      "June",
                             "July",    "August",   "September", "October", "November", "December"};
const char *kWeekdayNames[] = {"Monday", "Tuesday",  "Wednesday", "Thursday",
                               "Friday", "Saturday", "Sunday"};

// What a timex denotes. Reference kinds are relative to the creation day D.
enum class Meaning { kFixed, kPast, kPresent, kFuture, kUnknown };
struct TimeValue {
  Meaning meaning = Meaning::kUnknown;
  int64_t lo = 0;
  int64_t hi = 0;
};

std::pair<int64_t, int64_t> Bounds(const TimeValue &v, int64_t creation_day) {
  switch (v.meaning) {
    case Meaning::kFixed: return {v.lo, v.hi};
    case Meaning::kPast: return {kNegInf, creation_day - 1};
    case Meaning::kPresent: return {creation_day, creation_day};
    case Meaning::kFuture: return {creation_day + 1, kPosInf};
    case Meaning::kUnknown: return {kNegInf, kPosInf};
  }
  return {kNegInf, kPosInf};
}

struct Verb {
  const char *lemma;
  const char *past;     // VBD
  const char *present;  // VBZ
  const char *participle;  // VBN
  bool reporting;
};
const Verb kVerbs[] = {
    {"finish", "finished", "finishes", "finished", false},
    {"publish", "published", "publishes", "published", false},
    {"arrive", "arrived", "arrives", "arrived", false},
    {"leave", "left", "leaves", "left", false},
    {"say", "said", "says", "said", true},
    {"announce", "announced", "announces", "announced", true},
};

struct Clause {
  int verb_token = -1;
  int anchor = -1;  // index into timexes, or -1
};

struct GenTimex {
  TimeValue value;
  std::string text;
  bool weekday = false;
  int weekday_index = 0;
  int sent = 0;
};

struct Builder {
  std::vector<Token> tokens;
  int Add(const std::string &text, const std::string &lemma, const std::string &pos,
          std::optional<int> head, const std::string &label) {
    Token t;
    t.index = static_cast<int>(tokens.size());
    t.text = text;
    t.lemma = lemma;
    t.pos = pos;
    t.dep_head = head;
    t.dep_label = label;
    tokens.push_back(t);
    return t.index;
  }
};

const std::array<Ymd, 6> kGridDays = {{{2000, 1, 1}, {2000, 1, 2}, {2000, 2, 29},
                                       {2000, 12, 31}, {2001, 1, 1}, {2001, 1, 7}}};
const std::array<Ymd, 5> kCreationDays = {
    {{2000, 1, 1}, {2000, 1, 3}, {2000, 3, 1}, {2001, 1, 1}, {2001, 1, 8}}};

}  // namespace

OracleInstance GenerateOracleInstance(Rng &rng) {
  OracleInstance inst;
  inst.doc.doc_id = "oracle";
  inst.doc.source = "synthetic";
  std::optional<int64_t> dct;
  if (rng.UniformIndex(5) >= 2) {
    const Ymd c = kCreationDays[rng.UniformIndex(kCreationDays.size())];
    dct = Day(c.y, c.m, c.d);
    inst.doc.dct = CivilDate{c.y, c.m, c.d};
  }

  const int total_clauses = 1 + static_cast<int>(rng.UniformIndex(5));
  const int num_sentences = 1 + static_cast<int>(rng.UniformIndex(std::min(3, total_clauses)));
  std::vector<int> per_sentence(num_sentences, 1);
  for (int extra = total_clauses - num_sentences; extra > 0; --extra) {
    ++per_sentence[rng.UniformIndex(num_sentences)];
  }

  struct EventInfo {
    int sent, token;
    int anchor;  // timex index, -2 for the creation time, -1 none
  };
  std::vector<EventInfo> events;
  std::vector<GenTimex> timexes;

  for (int s = 0; s < num_sentences; ++s) {
    Builder b;
    int first_verb = -1;
    bool has_past = false;
    bool has_future = false;
    std::vector<int> sentence_timexes;
    for (int c = 0; c < per_sentence[s]; ++c) {
      // Tokens are added first with placeholder heads, fixed below.
      const int cc = c > 0 ? b.Add("and", "and", "CC", 0, "cc") : -1;
      const Verb &verb = kVerbs[rng.UniformIndex(std::size(kVerbs))];
      const int form = static_cast<int>(rng.UniformIndex(4));  // past, present, future, perfect
      int aux = -1;
      if (form == 2) aux = b.Add("will", "will", "MD", 0, "aux");
      if (form == 3) aux = b.Add("has", "have", "VBZ", 0, "aux");
      const char *text = form == 0 ? verb.past : form == 1 ? verb.present
                                                : form == 2 ? verb.lemma
                                                            : verb.participle;
      const char *pos = form == 0 ? "VBD" : form == 1 ? "VBZ" : form == 2 ? "VB" : "VBN";
      const int v = b.Add(text, verb.lemma, pos, std::nullopt, "root");
      if (form == 0) has_past = true;
      if (form == 2) has_future = true;
      if (first_verb < 0) {
        first_verb = v;
      } else {
        b.tokens[v].dep_head = first_verb;
        b.tokens[v].dep_label = "conj";
      }
      if (cc >= 0) b.tokens[cc].dep_head = v;
      if (aux >= 0) b.tokens[aux].dep_head = v;

      int anchor = -1;
      if (rng.UniformIndex(10) >= 3) {
        GenTimex tx;
        tx.sent = s;
        std::vector<std::pair<std::string, std::string>> words;  // text, pos
        bool prepositional = true;
        const int kind = static_cast<int>(rng.UniformIndex(11));
        if (kind == 0) {  // year
          const int y = 2000 + static_cast<int>(rng.UniformIndex(2));
          words = {{std::to_string(y), "CD"}};
          tx.value = {Meaning::kFixed, Day(y, 1, 1), Day(y, 12, 31)};
        } else if (kind == 1) {  // month year
          const int y = 2000 + static_cast<int>(rng.UniformIndex(2));
          const int m = std::array<int, 3>{1, 2, 12}[rng.UniformIndex(3)];
          words = {{kMonthNames[m - 1], "NNP"}, {std::to_string(y), "CD"}};
          tx.value = {Meaning::kFixed, Day(y, m, 1), Day(y, m, MonthLength(y, m))};
        } else if (kind == 2) {  // month day , year
          const Ymd g = kGridDays[rng.UniformIndex(kGridDays.size())];
          words = {{kMonthNames[g.m - 1], "NNP"},
                   {std::to_string(g.d), "CD"},
                   {",", ","},
                   {std::to_string(g.y), "CD"}};
          tx.value = {Meaning::kFixed, Day(g.y, g.m, g.d), Day(g.y, g.m, g.d)};
        } else if (kind == 3) {  // ISO date
          const Ymd g = kGridDays[rng.UniformIndex(kGridDays.size())];
          char iso[16];
          std::snprintf(iso, sizeof(iso), "%04d-%02d-%02d", g.y, g.m, g.d);
          words = {{iso, "CD"}};
          tx.value = {Meaning::kFixed, Day(g.y, g.m, g.d), Day(g.y, g.m, g.d)};
        } else if (kind == 4) {  // bare month
          const int m = std::array<int, 3>{1, 2, 12}[rng.UniformIndex(3)];
          words = {{kMonthNames[m - 1], "NNP"}};
          if (dct) {
            const int y = FromDay(*dct).y;
            tx.value = {Meaning::kFixed, Day(y, m, 1), Day(y, m, MonthLength(y, m))};
          }
        } else if (kind == 5) {  // month day
          const int m = std::array<int, 3>{1, 2, 12}[rng.UniformIndex(3)];
          const int d = 1 + static_cast<int>(rng.UniformIndex(3));
          words = {{kMonthNames[m - 1], "NNP"}, {std::to_string(d), "CD"}};
          if (dct) {
            const int y = FromDay(*dct).y;
            tx.value = {Meaning::kFixed, Day(y, m, d), Day(y, m, d)};
          }
        } else if (kind == 6) {  // relative day
          static const std::array<std::pair<std::vector<const char *>, int>, 4> kRel = {{
              {{"yesterday"}, -1}, {{"today"}, 0}, {{"tomorrow"}, 1},
              {{"the", "day", "before", "yesterday"}, -2}}};
          const auto &[ws, offset] = kRel[rng.UniformIndex(kRel.size())];
          static const char *kTags[] = {"DT", "NN", "IN", "NN"};
          for (size_t i = 0; i < ws.size(); ++i) {
            words.push_back({ws[i], ws.size() == 1 ? "NN" : kTags[i]});
          }
          prepositional = false;
          if (dct) {
            tx.value = {Meaning::kFixed, *dct + offset, *dct + offset};
          } else {
            tx.value.meaning = offset < 0 ? Meaning::kPast
                               : offset == 0 ? Meaning::kPresent
                                             : Meaning::kFuture;
          }
        } else if (kind == 7) {  // reference adverb
          static const std::array<std::pair<const char *, Meaning>, 6> kRef = {
              {{"now", Meaning::kPresent},
               {"currently", Meaning::kPresent},
               {"recently", Meaning::kPast},
               {"previously", Meaning::kPast},
               {"lately", Meaning::kPast},
               {"soon", Meaning::kFuture}}};
          const auto &[w, meaning] = kRef[rng.UniformIndex(kRef.size())];
          words = {{w, "RB"}};
          tx.value.meaning = meaning;
          prepositional = false;
        } else if (kind == 8) {  // weekday, resolved once the sentence is complete
          tx.weekday = true;
          tx.weekday_index = static_cast<int>(rng.UniformIndex(7));
          words = {{kWeekdayNames[tx.weekday_index], "NNP"}};
        } else if (kind == 9) {  // duration
          words = {{"the", "DT"}, {"past", "JJ"}, {"six", "CD"}, {"years", "NNS"}};
        } else {  // same year twice in a document is common; reuse the grid
          const Ymd g = kGridDays[rng.UniformIndex(kGridDays.size())];
          words = {{std::to_string(g.y), "CD"}};
          tx.value = {Meaning::kFixed, Day(g.y, 1, 1), Day(g.y, 12, 31)};
        }

        const int prep = prepositional ? b.Add("in", "in", "IN", 0, "case") : -1;
        std::vector<int> ids;
        for (const auto &[w, p] : words) ids.push_back(b.Add(w, w, p, 0, "dep"));
        const int head = ids.back();
        b.tokens[head].dep_head = v;
        b.tokens[head].dep_label = prepositional ? "obl" : "advmod";
        for (size_t i = 0; i + 1 < ids.size(); ++i) b.tokens[ids[i]].dep_head = head;
        if (prep >= 0) b.tokens[prep].dep_head = head;
        for (const auto &[w, p] : words) tx.text += (tx.text.empty() ? "" : " ") + w;
        anchor = static_cast<int>(timexes.size());
        sentence_timexes.push_back(anchor);
        timexes.push_back(tx);
      }
      if (anchor < 0 && verb.reporting && (form == 0 || form == 1)) anchor = -2;
      events.push_back({s, v, anchor});
    }
    b.Add(".", ".", ".", first_verb, "punct");

    // Weekdays: nearest matching day within six days of the creation time,
    // backwards in past-tense sentences, forwards in future ones.
    for (int t : sentence_timexes) {
      GenTimex &tx = timexes[t];
      if (!tx.weekday || !dct || has_past == has_future) continue;
      const int step = has_past ? -1 : 1;
      for (int k = 0; k <= 6; ++k) {
        const int64_t day = *dct + step * k;
        if (WeekdayOf(day) == tx.weekday_index) {
          tx.value = {Meaning::kFixed, day, day};
          break;
        }
      }
    }
    Sentence sentence;
    sentence.tokens = std::move(b.tokens);
    inst.doc.sentences.push_back(std::move(sentence));
  }

  inst.num_events = static_cast<int>(events.size());
  inst.num_timexes = static_cast<int>(timexes.size());

  // Enumerate the creation day over a range wider than the date grid.
  std::vector<int64_t> creation_days;
  if (dct) {
    creation_days.push_back(*dct);
  } else {
    for (int64_t d = Day(1999, 6, 1); d <= Day(2002, 6, 30); ++d) creation_days.push_back(d);
  }
  const TimeValue creation_value{Meaning::kPresent, 0, 0};
  auto value_of = [&](int anchor) -> const TimeValue & {
    return anchor == -2 ? creation_value : timexes[anchor].value;
  };

  for (size_t i = 0; i < events.size(); ++i) {
    for (size_t j = i + 1; j < events.size(); ++j) {
      const EventInfo &a = events[i];
      const EventInfo &b = events[j];
      if (a.anchor == -1 || b.anchor == -1 || b.sent - a.sent > 1) continue;
      bool always_before = true;
      bool always_after = true;
      bool always_equal = true;
      for (int64_t d : creation_days) {
        // An event lies somewhere inside its anchor's interval; an event
        // anchored to the same timex may lie on any day of it independently.
        const auto [lo1, hi1] = Bounds(value_of(a.anchor), d);
        const auto [lo2, hi2] = Bounds(value_of(b.anchor), d);
        if (!(hi1 < lo2)) always_before = false;
        if (!(lo1 > hi2)) always_after = false;
        if (!(lo1 == hi1 && lo2 == hi2 && lo1 == lo2 && lo1 > kNegInf && hi1 < kPosInf)) {
          always_equal = false;
        }
        if (!always_before && !always_after && !always_equal) break;
      }
      std::optional<Label> label;
      if (always_before) label = Label::kBefore;
      if (always_after) label = Label::kAfter;
      if (always_equal) label = Label::kEqual;
      if (label) inst.expected.emplace_back(a.sent, a.token, b.sent, b.token, *label);
    }
  }

  std::ostringstream desc;
  desc << "dct=" << (inst.doc.dct ? FormatIsoDate(*inst.doc.dct) : "none");
  for (size_t s = 0; s < inst.doc.sentences.size(); ++s) {
    std::vector<std::string> words;
    for (const Token &t : inst.doc.sentences[s].tokens) words.push_back(t.text);
    desc << " | " << RenderText(words);
  }
  inst.description = desc.str();
  return inst;
}

}  // namespace tempdistill::testing
