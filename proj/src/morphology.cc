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

#include "arabkit/morphology.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <tuple>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/utf8.h"

namespace arabkit::data {
extern const std::string_view kPosTags;
}  // namespace arabkit::data

namespace arabkit::morph {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool SolutionOrder(const MorphSolution &a, const MorphSolution &b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return std::tie(a.lemma, a.pos, a.root) < std::tie(b.lemma, b.pos, b.root);
}

}  // namespace

TagSet TagSet::Parse(std::string_view tsv) {
  TagSet set;
  size_t line_no = 0, pos = 0;
  while (pos < tsv.size()) {
    size_t eol = tsv.find('\n', pos);
    if (eol == std::string_view::npos) eol = tsv.size();
    std::string_view line = tsv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  "tag set line " + std::to_string(line_no) + ": expected tag<TAB>coarse");
    }
    std::string tag(fields[0]);
    if (!set.coarse_.emplace(tag, std::string(fields[1])).second) {
      throw Error(ErrorCode::kMalformedRow,
                  "tag set line " + std::to_string(line_no) + ": duplicate tag " + tag);
    }
    set.tags_.push_back(std::move(tag));
  }
  if (set.tags_.empty()) throw Error(ErrorCode::kEmptyInput, "empty tag set");
  return set;
}

const TagSet &TagSet::Default() {
  static const TagSet set = Parse(data::kPosTags);
  return set;
}

bool TagSet::Contains(std::string_view tag) const {
  return coarse_.find(std::string(tag)) != coarse_.end();
}

std::string_view TagSet::Coarse(std::string_view tag) const {
  auto it = coarse_.find(std::string(tag));
  return it == coarse_.end() ? std::string_view() : std::string_view(it->second);
}

std::vector<std::string> TagSet::CoarseTags() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto &tag : tags_) {
    const std::string &c = coarse_.at(tag);
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

MorphDictionary MorphDictionary::Parse(std::istream &in, const TagSet *tags) {
  MorphDictionary dict;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kVersion = "# version:";
      if (std::string_view(line).substr(0, kVersion.size()) == kVersion) {
        dict.version_ = utf8::Trim(std::string_view(line).substr(kVersion.size()));
      }
      continue;
    }
    auto malformed = [&](const std::string &why) {
      return Error(ErrorCode::kMalformedRow,
                   "dictionary line " + std::to_string(line_no) + ": " + why);
    };
    auto fields = SplitTabs(line);
    if (fields.size() != 5) {
      throw malformed("expected 5 tab-separated fields, found " +
                      std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw malformed("wordform, lemma and pos must be non-empty");
    }
    MorphSolution solution{script::Normalize(fields[1]), std::string(fields[2]),
                           script::Normalize(fields[3]), 0};
    auto [ptr, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(),
                                     solution.frequency);
    if (ec != std::errc() || ptr != fields[4].data() + fields[4].size() || fields[4].empty()) {
      throw malformed("frequency must be a non-negative integer");
    }
    if (tags != nullptr && !tags->Contains(solution.pos)) {
      throw Error(ErrorCode::kUnknownTag, "dictionary line " + std::to_string(line_no) +
                                              ": POS '" + solution.pos +
                                              "' is not in the tag set");
    }
    auto &list = dict.entries_[script::Normalize(fields[0])];
    if (std::find(list.begin(), list.end(), solution) != list.end()) {
      throw Error(ErrorCode::kDuplicateExactRow,
                  "dictionary line " + std::to_string(line_no) + " repeats an earlier row");
    }
    list.push_back(std::move(solution));
    ++dict.solution_count_;
  }
  if (dict.entries_.empty()) throw Error(ErrorCode::kEmptyDictionary, "no dictionary rows");
  for (auto &[form, list] : dict.entries_) {
    std::stable_sort(list.begin(), list.end(), SolutionOrder);
  }
  return dict;
}

MorphDictionary MorphDictionary::Load(const std::filesystem::path &path, const TagSet *tags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kResourceNotFound,
                "cannot open dictionary '" + path.string() + "'");
  }
  return Parse(in, tags);
}

const std::vector<MorphSolution> *MorphDictionary::Find(std::string_view wordform) const {
  auto it = entries_.find(wordform);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string_view SourceName(Source source) {
  switch (source) {
    case Source::kExact: return "exact";
    case Source::kStripped: return "stripped";
    case Source::kFallback: return "fallback";
    case Source::kOov: return "oov";
  }
  return "";
}

std::optional<Task> ParseTask(std::string_view name) {
  if (name == "lemma") return Task::kLemma;
  if (name == "pos") return Task::kPos;
  if (name == "root") return Task::kRoot;
  if (name == "full") return Task::kFull;
  return std::nullopt;
}

namespace {

// The ranked list for a word and which lookup step found it.
std::pair<const std::vector<MorphSolution> *, Source> Lookup(std::string_view word,
                                                             const MorphDictionary &dict) {
  std::string normalized = script::Normalize(word);
  if (const auto *list = dict.Find(normalized)) return {list, Source::kExact};
  std::string stripped = script::StripDiacritics(normalized);
  if (stripped != normalized) {
    if (const auto *list = dict.Find(stripped)) return {list, Source::kStripped};
  }
  return {nullptr, Source::kOov};
}

}  // namespace

TaggedToken Analyze(std::string_view word, const MorphDictionary &dict,
                    const OovFallback *fallback) {
  TaggedToken token;
  token.surface = std::string(word);
  auto [list, source] = Lookup(word, dict);
  if (list != nullptr) {
    token.solution = list->front();
    token.source = source;
  } else if (fallback != nullptr) {
    if (auto solution = fallback->Analyze(word)) {
      token.solution = std::move(solution);
      token.source = Source::kFallback;
    }
  }
  return token;
}

std::vector<TaggedToken> AnalyzeText(std::string_view text, const MorphDictionary &dict,
                                     const OovFallback *fallback) {
  std::vector<TaggedToken> out;
  for (const std::string &token : utf8::SplitWhitespace(text)) {
    out.push_back(Analyze(token, dict, fallback));
  }
  return out;
}

std::vector<MorphSolution> AllSolutions(std::string_view word, const MorphDictionary &dict) {
  auto [list, source] = Lookup(word, dict);
  if (list == nullptr) return {};
  return *list;
}

std::string FormatToken(const TaggedToken &token, Task task) {
  std::string out = token.surface + '\t';
  if (!token.solution) return out + "OOV";
  const MorphSolution &s = *token.solution;
  switch (task) {
    case Task::kLemma: return out + s.lemma;
    case Task::kPos: return out + s.pos;
    case Task::kRoot: return out + s.root;
    case Task::kFull:
      return out + s.lemma + '\t' + s.pos + '\t' + s.root + '\t' +
             std::to_string(s.frequency);
  }
  return out;
}

}  // namespace arabkit::morph
