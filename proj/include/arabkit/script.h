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

#ifndef ARABKIT_SCRIPT_H_
#define ARABKIT_SCRIPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arabkit::script {

inline constexpr char32_t kTatweel = U'ـ';
inline constexpr char32_t kShaddah = U'ّ';

// Vowel marks, including the three tanwin forms and sukun.
enum class Vowel : std::uint8_t {
  kFatha,
  kDamma,
  kKasra,
  kSukun,
  kFathatan,
  kDammatan,
  kKasratan,
};

std::optional<Vowel> VowelFromCodepoint(char32_t cp);
char32_t VowelCodepoint(Vowel vowel);

// The marks carried by one base letter: at most one vowel, plus shaddah.
struct DiacriticSet {
  std::optional<Vowel> vowel;
  bool shaddah = false;

  bool empty() const { return !vowel && !shaddah; }
  bool operator==(const DiacriticSet &) const = default;
};

struct SkeletonPosition {
  char32_t base = 0;
  DiacriticSet marks;

  bool operator==(const SkeletonPosition &) const = default;
};

struct SkeletonWord {
  std::vector<SkeletonPosition> positions;

  size_t size() const { return positions.size(); }
  bool operator==(const SkeletonWord &) const = default;
};

// Character classes.
bool IsArabicLetter(char32_t cp);    // base letters usable in a skeleton
bool IsDiacritic(char32_t cp);       // the eight marks a DiacriticSet models
bool IsArabicMark(char32_t cp);      // any Arabic combining mark
bool IsDigit(char32_t cp);           // ASCII, Arabic-Indic, extended
bool IsSpecialChar(char32_t cp);     // punctuation and symbols
bool IsAlifVariant(char32_t cp);     // أ إ آ ٱ

// Arabic-scope canonical composition: composes alif/waw/yeh/heh with a
// following combining hamza or madda, and reorders runs of combining marks
// by canonical combining class. Other text is untouched.
std::string Normalize(std::string_view text);

// Splits a single token into base letters with their attached marks. The
// token is normalized first; tatweel is ignored.
// Throws Error(kLeadingDiacritic | kNonArabicLetter | kDuplicateMark).
SkeletonWord Decompose(std::string_view token);

// Inverse of Decompose. Marks are emitted in canonical order.
std::string Recompose(const SkeletonWord &word);

struct StripOptions {
  bool diacritics = false;
  bool shaddah = false;
  bool digits = false;
  bool unify_alif = false;
  bool special_chars = false;
  bool tatweel = false;

  static StripOptions All() { return {true, true, true, true, true, true}; }
};

// Removes or unifies the selected character categories. Total: malformed
// UTF-8 bytes come back as U+FFFD.
std::string ArStrip(std::string_view text, const StripOptions &options);

// Convenience for the common "drop every vowel mark and shaddah" case.
std::string StripDiacritics(std::string_view text);

struct TransliterationResult {
  std::string text;
  // Codepoints that had no table entry and were passed through, in order of
  // first appearance.
  std::vector<char32_t> unmapped;
};

enum class TableCategory { kLetter, kDiacritic, kTatweel };

struct TableEntry {
  char32_t arabic;
  char symbol;
  TableCategory category;
};

// Bidirectional Arabic <-> Buckwalter mapping loaded from the versioned TSV
// table (arabic_codepoint TAB buckwalter_symbol TAB category).
class BuckwalterTable {
 public:
  // Parses table text. Throws Error(kMalformedRow) on bad rows and
  // Error(kInvalidArgument) when the mapping is not one-to-one.
  static BuckwalterTable Parse(std::string_view tsv);

  // The classic table compiled into the library, parsed on first use.
  static const BuckwalterTable &Default();

  TransliterationResult ToBuckwalter(std::string_view arabic) const;
  TransliterationResult FromBuckwalter(std::string_view latin) const;

  const std::vector<TableEntry> &entries() const { return entries_; }

 private:
  std::vector<TableEntry> entries_;
  std::unordered_map<char32_t, char> to_latin_;
  std::unordered_map<char, char32_t> to_arabic_;
};

std::string ToBuckwalter(std::string_view arabic);
std::string FromBuckwalter(std::string_view latin);

}  // namespace arabkit::script

#endif  // ARABKIT_SCRIPT_H_
