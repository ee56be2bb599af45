// Copyright 2026 The ArabKit Authors.
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

#include "arabkit/script.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "arabkit/error.h"
#include "arabkit/utf8.h"

namespace arabkit::data {
extern const std::string_view kBuckwalterTable;
}  // namespace arabkit::data

namespace arabkit::script {

namespace {

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

// Canonical combining class for the Arabic combining marks; 0 otherwise.
int CombiningClass(char32_t cp) {
  if (InRange(cp, 0x064B, 0x0652)) return 27 + static_cast<int>(cp - 0x064B);
  switch (cp) {
    case 0x0670: return 35;
    case 0x0618: return 30;
    case 0x0619: return 31;
    case 0x061A: return 32;
    case 0x0655: case 0x0656: case 0x065C: case 0x065F:
    case 0x06E3: case 0x06EA: case 0x06ED:
      return 220;
    default:
      break;
  }
  if (InRange(cp, 0x0610, 0x0617) || InRange(cp, 0x0653, 0x065E) ||
      InRange(cp, 0x06D6, 0x06DC) || InRange(cp, 0x06DF, 0x06E4) ||
      InRange(cp, 0x06E7, 0x06E8) || InRange(cp, 0x06EB, 0x06EC)) {
    return 230;
  }
  return 0;
}

// Canonical compositions that involve Arabic combining hamza and madda.
char32_t Compose(char32_t base, char32_t mark) {
  struct Pair { char32_t base, mark, composed; };
  static constexpr Pair kPairs[] = {
      {0x0627, 0x0653, 0x0622}, {0x0627, 0x0654, 0x0623},
      {0x0648, 0x0654, 0x0624}, {0x0627, 0x0655, 0x0625},
      {0x064A, 0x0654, 0x0626}, {0x06D5, 0x0654, 0x06C0},
      {0x06C1, 0x0654, 0x06C2}, {0x06D2, 0x0654, 0x06D3},
  };
  for (const Pair &p : kPairs) {
    if (p.base == base && p.mark == mark) return p.composed;
  }
  return 0;
}

bool IsArabicBlock(char32_t cp) {
  return InRange(cp, 0x0600, 0x06FF) || InRange(cp, 0x0750, 0x077F) ||
         InRange(cp, 0x08A0, 0x08FF) || InRange(cp, 0xFB50, 0xFDFF) ||
         InRange(cp, 0xFE70, 0xFEFF);
}

}  // namespace

std::optional<Vowel> VowelFromCodepoint(char32_t cp) {
  switch (cp) {
    case 0x064E: return Vowel::kFatha;
    case 0x064F: return Vowel::kDamma;
    case 0x0650: return Vowel::kKasra;
    case 0x0652: return Vowel::kSukun;
    case 0x064B: return Vowel::kFathatan;
    case 0x064C: return Vowel::kDammatan;
    case 0x064D: return Vowel::kKasratan;
    default: return std::nullopt;
  }
}

char32_t VowelCodepoint(Vowel vowel) {
  switch (vowel) {
    case Vowel::kFatha: return 0x064E;
    case Vowel::kDamma: return 0x064F;
    case Vowel::kKasra: return 0x0650;
    case Vowel::kSukun: return 0x0652;
    case Vowel::kFathatan: return 0x064B;
    case Vowel::kDammatan: return 0x064C;
    case Vowel::kKasratan: return 0x064D;
  }
  return 0;
}

bool IsArabicLetter(char32_t cp) {
  return InRange(cp, 0x0620, 0x063F) || InRange(cp, 0x0641, 0x064A) ||
         InRange(cp, 0x066E, 0x066F) || InRange(cp, 0x0671, 0x06D3) ||
         cp == 0x06D5 || InRange(cp, 0x06EE, 0x06EF) ||
         InRange(cp, 0x06FA, 0x06FC) || cp == 0x06FF ||
         InRange(cp, 0x0750, 0x077F) || InRange(cp, 0x08A0, 0x08C9);
}

bool IsDiacritic(char32_t cp) { return InRange(cp, 0x064B, 0x0652); }

bool IsArabicMark(char32_t cp) {
  return InRange(cp, 0x0610, 0x061A) || InRange(cp, 0x064B, 0x065F) ||
         cp == 0x0670 || InRange(cp, 0x06D6, 0x06DC) ||
         InRange(cp, 0x06DF, 0x06E4) || InRange(cp, 0x06E7, 0x06E8) ||
         InRange(cp, 0x06EA, 0x06ED) || InRange(cp, 0x08D3, 0x08FF);
}

bool IsDigit(char32_t cp) {
  return InRange(cp, U'0', U'9') || InRange(cp, 0x0660, 0x0669) ||
         InRange(cp, 0x06F0, 0x06F9);
}

bool IsSpecialChar(char32_t cp) {
  if (cp < 0x80) {
    return InRange(cp, 0x21, 0x2F) || InRange(cp, 0x3A, 0x40) ||
           InRange(cp, 0x5B, 0x60) || InRange(cp, 0x7B, 0x7E);
  }
  switch (cp) {
    case 0x00D7: case 0x00F7:
    case 0x060C: case 0x060D: case 0x061B: case 0x061E: case 0x061F:
    case 0x06D4: case 0x06DD: case 0x06DE: case 0x06E9:
    case 0xFD3E: case 0xFD3F:
      return true;
    default:
      break;
  }
  return InRange(cp, 0x00A1, 0x00BF) || InRange(cp, 0x0606, 0x060B) ||
         InRange(cp, 0x066A, 0x066D) || InRange(cp, 0x2010, 0x2027) ||
         InRange(cp, 0x2030, 0x205E) || InRange(cp, 0x20A0, 0x20CF) ||
         InRange(cp, 0x2100, 0x214F) || InRange(cp, 0x2190, 0x23FF) ||
         InRange(cp, 0x2500, 0x27BF) || InRange(cp, 0x3000, 0x3003) ||
         InRange(cp, 0xFE50, 0xFE6B) || InRange(cp, 0xFF01, 0xFF0F);
}

bool IsAlifVariant(char32_t cp) {
  return cp == 0x0622 || cp == 0x0623 || cp == 0x0625 || cp == 0x0671;
}

std::string Normalize(std::string_view text) {
  std::u32string in = utf8::Decode(text);
  std::u32string out;
  out.reserve(in.size());
  size_t i = 0;
  while (i < in.size()) {
    if (CombiningClass(in[i]) != 0) {
      // A mark run with no preceding starter in this pass; reorder only.
      size_t j = i;
      while (j < in.size() && CombiningClass(in[j]) != 0) ++j;
      std::stable_sort(in.begin() + i, in.begin() + j, [](char32_t a, char32_t b) {
        return CombiningClass(a) < CombiningClass(b);
      });
      out.append(in, i, j - i);
      i = j;
      continue;
    }
    char32_t starter = in[i++];
    size_t j = i;
    while (j < in.size() && CombiningClass(in[j]) != 0) ++j;
    std::u32string marks(in.begin() + i, in.begin() + j);
    std::stable_sort(marks.begin(), marks.end(), [](char32_t a, char32_t b) {
      return CombiningClass(a) < CombiningClass(b);
    });
    std::u32string kept;
    int last_kept_class = 0;
    for (char32_t mark : marks) {
      int ccc = CombiningClass(mark);
      bool blocked = !kept.empty() && last_kept_class >= ccc;
      char32_t composed = blocked ? 0 : Compose(starter, mark);
      if (composed != 0) {
        starter = composed;
      } else {
        kept.push_back(mark);
        last_kept_class = ccc;
      }
    }
    out.push_back(starter);
    out += kept;
    i = j;
  }
  return utf8::Encode(out);
}

SkeletonWord Decompose(std::string_view token) {
  SkeletonWord word;
  for (char32_t cp : utf8::Decode(Normalize(token))) {
    if (cp == kTatweel) continue;
    if (IsArabicLetter(cp)) {
      word.positions.push_back({cp, {}});
      continue;
    }
    if (!IsDiacritic(cp)) {
      std::string shown;
      utf8::Append(&shown, cp);
      throw Error(ErrorCode::kNonArabicLetter,
                  "'" + shown + "' in token '" + std::string(token) + "'");
    }
    if (word.positions.empty()) {
      throw Error(ErrorCode::kLeadingDiacritic,
                  "mark before any base letter in '" + std::string(token) + "'");
    }
    DiacriticSet &marks = word.positions.back().marks;
    if (cp == kShaddah) {
      if (marks.shaddah) {
        throw Error(ErrorCode::kDuplicateMark,
                    "repeated shaddah in '" + std::string(token) + "'");
      }
      marks.shaddah = true;
    } else {
      if (marks.vowel) {
        throw Error(ErrorCode::kDuplicateMark,
                    "two vowel marks on one letter in '" + std::string(token) + "'");
      }
      marks.vowel = VowelFromCodepoint(cp);
    }
  }
  return word;
}

std::string Recompose(const SkeletonWord &word) {
  std::string out;
  for (const SkeletonPosition &pos : word.positions) {
    utf8::Append(&out, pos.base);
    // Canonical order: tanwin and short vowels (27..32) before shaddah (33),
    // sukun (34) after it.
    const auto &m = pos.marks;
    bool sukun = m.vowel == Vowel::kSukun;
    if (m.vowel && !sukun) utf8::Append(&out, VowelCodepoint(*m.vowel));
    if (m.shaddah) utf8::Append(&out, kShaddah);
    if (sukun) utf8::Append(&out, VowelCodepoint(Vowel::kSukun));
  }
  return out;
}

std::string ArStrip(std::string_view text, const StripOptions &options) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::Decode(text)) {
    if (cp == kShaddah) {
      if (options.shaddah) continue;
    } else if (IsArabicMark(cp)) {
      if (options.diacritics) continue;
    } else if (cp == kTatweel) {
      if (options.tatweel) continue;
    } else if (IsDigit(cp)) {
      if (options.digits) continue;
    } else if (IsSpecialChar(cp)) {
      if (options.special_chars) continue;
    } else if (IsAlifVariant(cp)) {
      if (options.unify_alif) cp = U'ا';
    }
    utf8::Append(&out, cp);
  }
  return out;
}

std::string StripDiacritics(std::string_view text) {
  StripOptions options;
  options.diacritics = true;
  options.shaddah = true;
  options.tatweel = true;
  return ArStrip(text, options);
}

BuckwalterTable BuckwalterTable::Parse(std::string_view tsv) {
  BuckwalterTable table;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= tsv.size()) {
    size_t eol = tsv.find('\n', pos);
    if (eol == std::string_view::npos) eol = tsv.size();
    std::string_view line = tsv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto bad = [&](const std::string &why) {
      return Error(ErrorCode::kMalformedRow,
                   "transliteration table line " + std::to_string(line_no) +
                       ": " + why);
    };
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
      throw bad("expected 3 tab-separated fields");
    }
    std::string_view cp_field = line.substr(0, t1);
    std::string_view symbol = line.substr(t1 + 1, t2 - t1 - 1);
    std::string_view category = line.substr(t2 + 1);
    if (cp_field.size() < 3 || cp_field.substr(0, 2) != "U+") {
      throw bad("codepoint must look like U+XXXX");
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(cp_field.data() + 2,
                                     cp_field.data() + cp_field.size(), value, 16);
    if (ec != std::errc() || ptr != cp_field.data() + cp_field.size()) {
      throw bad("bad hex codepoint");
    }
    if (symbol.size() != 1 || static_cast<unsigned char>(symbol[0]) >= 0x80) {
      throw bad("symbol must be one ASCII character");
    }
    TableEntry entry{static_cast<char32_t>(value), symbol[0], TableCategory::kLetter};
    if (category == "letter") {
      entry.category = TableCategory::kLetter;
    } else if (category == "diacritic") {
      entry.category = TableCategory::kDiacritic;
    } else if (category == "tatweel") {
      entry.category = TableCategory::kTatweel;
    } else {
      throw bad("unknown category '" + std::string(category) + "'");
    }
    if (!table.to_latin_.emplace(entry.arabic, entry.symbol).second ||
        !table.to_arabic_.emplace(entry.symbol, entry.arabic).second) {
      throw Error(ErrorCode::kMalformedRow,
                  "transliteration table line " + std::to_string(line_no) +
                      " breaks the one-to-one mapping");
    }
    table.entries_.push_back(entry);
  }
  return table;
}

const BuckwalterTable &BuckwalterTable::Default() {
  static const BuckwalterTable table = Parse(data::kBuckwalterTable);
  return table;
}

TransliterationResult BuckwalterTable::ToBuckwalter(std::string_view arabic) const {
  TransliterationResult result;
  result.text.reserve(arabic.size());
  for (char32_t cp : utf8::Decode(arabic)) {
    auto it = to_latin_.find(cp);
    if (it != to_latin_.end()) {
      result.text.push_back(it->second);
      continue;
    }
    if (IsArabicBlock(cp) &&
        std::find(result.unmapped.begin(), result.unmapped.end(), cp) ==
            result.unmapped.end()) {
      result.unmapped.push_back(cp);
    }
    utf8::Append(&result.text, cp);
  }
  return result;
}

TransliterationResult BuckwalterTable::FromBuckwalter(std::string_view latin) const {
  TransliterationResult result;
  result.text.reserve(latin.size() * 2);
  for (char32_t cp : utf8::Decode(latin)) {
    if (cp < 0x80) {
      auto it = to_arabic_.find(static_cast<char>(cp));
      if (it != to_arabic_.end()) {
        utf8::Append(&result.text, it->second);
        continue;
      }
      bool letter = (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
      if (letter && std::find(result.unmapped.begin(), result.unmapped.end(),
                              cp) == result.unmapped.end()) {
        result.unmapped.push_back(cp);
      }
    }
    utf8::Append(&result.text, cp);
  }
  return result;
}

std::string ToBuckwalter(std::string_view arabic) {
  return BuckwalterTable::Default().ToBuckwalter(arabic).text;
}

std::string FromBuckwalter(std::string_view latin) {
  return BuckwalterTable::Default().FromBuckwalter(latin).text;
}

}  // namespace arabkit::script
