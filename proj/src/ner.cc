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

#include "arabkit/ner.h"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/utf8.h"

namespace arabkit::data {
extern const std::string_view kNerTypes;
}  // namespace arabkit::data

namespace arabkit::ner {

namespace {

std::vector<std::string> NormalizedTokens(std::string_view surface) {
  std::vector<std::string> tokens = utf8::SplitWhitespace(surface);
  for (auto &t : tokens) t = script::Normalize(t);
  return tokens;
}

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

void StripCr(std::string *line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

}  // namespace

char IobChar(Iob label) {
  switch (label) {
    case Iob::kB: return 'B';
    case Iob::kI: return 'I';
    case Iob::kO: return 'O';
  }
  return '?';
}

EntityTypeSet::EntityTypeSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorCode::kEmptyInput, "entity type set is empty");
  std::set<std::string_view> seen;
  for (const auto &name : names_) {
    if (name.empty() || !seen.insert(name).second) {
      throw Error(ErrorCode::kMalformedRow, "duplicate or empty entity type '" + name + "'");
    }
  }
}

EntityTypeSet EntityTypeSet::Parse(std::string_view text) {
  std::vector<std::string> names;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string name = utf8::Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (name.empty() || name.front() == '#') continue;
    names.push_back(std::move(name));
  }
  return EntityTypeSet(std::move(names));
}

const EntityTypeSet &EntityTypeSet::Default() {
  static const EntityTypeSet set = [] {
    EntityTypeSet parsed = Parse(data::kNerTypes);
    for (std::string_view core : {"PERS", "ORG", "LOC", "GPE"}) {
      if (!parsed.Contains(core)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "default entity types lack " + std::string(core));
      }
    }
    return parsed;
  }();
  return set;
}

std::optional<size_t> EntityTypeSet::IndexOf(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<size_t>(it - names_.begin());
}

LabelMatrix LabelMatrix::Empty(std::vector<std::string> tokens, std::vector<std::string> types) {
  LabelMatrix m;
  m.labels.assign(types.size(), std::vector<Iob>(tokens.size(), Iob::kO));
  m.tokens = std::move(tokens);
  m.types = std::move(types);
  return m;
}

bool LabelMatrix::Valid() const {
  if (labels.size() != types.size()) return false;
  return std::all_of(labels.begin(), labels.end(),
                     [&](const auto &row) { return row.size() == tokens.size(); });
}

std::vector<TokenRange> DecodeIob(std::span<const Iob> row) {
  std::vector<TokenRange> spans;
  std::optional<size_t> open;
  for (size_t i = 0; i < row.size(); ++i) {
    switch (row[i]) {
      case Iob::kB:
        if (open) spans.emplace_back(*open, i);
        open = i;
        break;
      case Iob::kI:
        if (!open) open = i;  // IOB2 repair
        break;
      case Iob::kO:
        if (open) spans.emplace_back(*open, i);
        open.reset();
        break;
    }
  }
  if (open) spans.emplace_back(*open, row.size());
  return spans;
}

std::vector<EntitySpan> DecodeMatrix(const LabelMatrix &matrix) {
  std::vector<EntitySpan> spans;
  for (size_t t = 0; t < matrix.types.size(); ++t) {
    for (auto [start, end] : DecodeIob(matrix.labels[t])) {
      spans.push_back({start, end, matrix.types[t]});
    }
  }
  std::sort(spans.begin(), spans.end());
  return spans;
}

std::vector<EntitySpan> ProjectFlat(std::vector<EntitySpan> spans, const EntityTypeSet &order) {
  auto rank = [&](const EntitySpan &s) {
    auto index = order.IndexOf(s.type);
    return std::make_tuple(index.value_or(order.size()), std::string_view(s.type));
  };
  std::sort(spans.begin(), spans.end(), [&](const EntitySpan &a, const EntitySpan &b) {
    if (a.length() != b.length()) return a.length() > b.length();
    if (a.start != b.start) return a.start < b.start;
    return rank(a) < rank(b);
  });
  std::vector<EntitySpan> kept;
  for (auto &span : spans) {
    bool clash = std::any_of(kept.begin(), kept.end(),
                             [&](const EntitySpan &k) { return k.Overlaps(span); });
    if (!clash) kept.push_back(std::move(span));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Gazetteer Gazetteer::Parse(std::istream &in, const EntityTypeSet *types) {
  Gazetteer gazetteer;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCr(&line);
    if (utf8::Trim(line).empty() || line.front() == '#') continue;
    auto fields = SplitTabs(line);
    auto where = "gazetteer line " + std::to_string(line_no);
    if (fields.size() != 2 || fields[1].empty()) {
      throw Error(ErrorCode::kMalformedRow, where + ": expected surface<TAB>type");
    }
    if (types != nullptr && !types->Contains(fields[1])) {
      throw Error(ErrorCode::kUnknownTag,
                  where + ": unknown entity type '" + std::string(fields[1]) + "'");
    }
    try {
      gazetteer.Add(fields[0], fields[1]);
    } catch (const Error &e) {
      throw Error(ErrorCode::kMalformedRow, where + ": " + e.what());
    }
  }
  return gazetteer;
}

void Gazetteer::Add(std::string_view surface, std::string_view type) {
  std::vector<std::string> tokens = NormalizedTokens(surface);
  if (tokens.empty() || tokens.size() > kMaxGazetteerNgram) {
    throw Error(ErrorCode::kMalformedRow, "gazetteer entries must have 1 to 5 tokens");
  }
  auto it = entries_.find(type);
  if (it == entries_.end()) it = entries_.emplace(std::string(type), std::set<std::vector<std::string>>()).first;
  if (it->second.insert(std::move(tokens)).second) ++size_;
}

bool Gazetteer::Contains(std::span<const std::string> ngram, std::string_view type) const {
  auto it = entries_.find(type);
  if (it == entries_.end()) return false;
  return it->second.count(std::vector<std::string>(ngram.begin(), ngram.end())) > 0;
}

std::vector<std::string> Gazetteer::Types() const {
  std::vector<std::string> out;
  for (const auto &[type, entries] : entries_) out.push_back(type);
  return out;
}

LabelMatrix TagGazetteer(const std::vector<std::string> &tokens, const Gazetteer &gazetteer,
                         const EntityTypeSet &types) {
  LabelMatrix matrix = LabelMatrix::Empty(tokens, types.names());
  std::vector<std::string> normalized;
  normalized.reserve(tokens.size());
  for (const auto &t : tokens) normalized.push_back(script::Normalize(t));

  for (size_t t = 0; t < types.size(); ++t) {
    const std::string &type = types.names()[t];
    auto &row = matrix.labels[t];
    size_t i = 0;
    while (i < normalized.size()) {
      size_t longest = 0;
      size_t max_n = std::min(kMaxGazetteerNgram, normalized.size() - i);
      for (size_t n = max_n; n >= 1; --n) {
        if (gazetteer.Contains(std::span(normalized).subspan(i, n), type)) {
          longest = n;
          break;
        }
      }
      if (longest == 0) {
        ++i;
        continue;
      }
      row[i] = Iob::kB;
      for (size_t k = 1; k < longest; ++k) row[i + k] = Iob::kI;
      i += longest;
    }
  }
  return matrix;
}

GazetteerTagger::GazetteerTagger(Gazetteer gazetteer, EntityTypeSet types)
    : gazetteer_(std::move(gazetteer)), types_(std::move(types)) {}

LabelMatrix GazetteerTagger::Classify(const std::vector<std::string> &tokens) const {
  return TagGazetteer(tokens, gazetteer_, types_);
}

LabelMatrix ReduceArgmax(std::vector<std::string> tokens, std::vector<std::string> types,
                         const std::vector<std::vector<LabelScores>> &distributions) {
  if (distributions.size() != types.size()) {
    throw Error(ErrorCode::kTaggerFailure, "one score row per entity type expected");
  }
  LabelMatrix matrix = LabelMatrix::Empty(std::move(tokens), std::move(types));
  for (size_t t = 0; t < distributions.size(); ++t) {
    if (distributions[t].size() != matrix.tokens.size()) {
      throw Error(ErrorCode::kTaggerFailure, "score row length differs from token count");
    }
    for (size_t i = 0; i < matrix.tokens.size(); ++i) {
      const LabelScores &s = distributions[t][i];
      // Indices follow the Iob enum: B=0, I=1, O=2. Visit O first so it wins
      // ties, then B, then I.
      Iob best = Iob::kO;
      for (Iob candidate : {Iob::kB, Iob::kI}) {
        if (s[static_cast<size_t>(candidate)] > s[static_cast<size_t>(best)]) best = candidate;
      }
      matrix.labels[t][i] = best;
    }
  }
  return matrix;
}

SpanCounts &SpanCounts::operator+=(const SpanCounts &other) {
  gold += other.gold;
  predicted += other.predicted;
  correct += other.correct;
  return *this;
}

SpanCounts CountSpanMatches(std::span<const EntitySpan> gold,
                            std::span<const EntitySpan> predicted) {
  std::vector<EntitySpan> g(gold.begin(), gold.end());
  std::vector<EntitySpan> p(predicted.begin(), predicted.end());
  std::sort(g.begin(), g.end());
  std::sort(p.begin(), p.end());
  std::vector<EntitySpan> common;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(common));
  return {g.size(), p.size(), common.size()};
}

eval::PrfScores SpanF1(std::span<const EntitySpan> gold, std::span<const EntitySpan> predicted) {
  SpanCounts c = CountSpanMatches(gold, predicted);
  return eval::PrfFromCounts(c.gold, c.predicted, c.correct);
}

std::vector<std::vector<EntitySpan>> ReadSpanBlocks(std::istream &in) {
  std::vector<std::vector<EntitySpan>> blocks;
  std::vector<EntitySpan> current;
  bool pending = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCr(&line);
    if (line.empty()) {
      blocks.push_back(std::move(current));
      current.clear();
      pending = false;
      continue;
    }
    auto fields = SplitTabs(line);
    auto where = "span file line " + std::to_string(line_no);
    if (fields.size() != 3 || fields[2].empty()) {
      throw Error(ErrorCode::kMalformedRow, where + ": expected start<TAB>end<TAB>type");
    }
    EntitySpan span;
    span.type = std::string(fields[2]);
    for (auto [field, out] : {std::pair{fields[0], &span.start}, std::pair{fields[1], &span.end}}) {
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), *out);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw Error(ErrorCode::kMalformedRow, where + ": bad token index");
      }
    }
    if (span.start >= span.end) {
      throw Error(ErrorCode::kMalformedRow, where + ": start must be below end");
    }
    current.push_back(std::move(span));
    pending = true;
  }
  if (pending) blocks.push_back(std::move(current));
  return blocks;
}

void WriteSpanBlock(std::ostream &out, std::span<const EntitySpan> spans) {
  for (const auto &s : spans) out << s.start << '\t' << s.end << '\t' << s.type << '\n';
  out << '\n';
}

std::vector<LabelMatrix> ReadLabelBlocks(std::istream &in, const EntityTypeSet &types) {
  std::vector<LabelMatrix> blocks;
  std::vector<std::string> tokens;
  std::vector<std::vector<std::pair<size_t, Iob>>> token_tags;
  bool pending = false;
  auto flush = [&] {
    LabelMatrix m = LabelMatrix::Empty(tokens, types.names());
    for (size_t i = 0; i < token_tags.size(); ++i) {
      for (auto [type, label] : token_tags[i]) m.labels[type][i] = label;
    }
    blocks.push_back(std::move(m));
    tokens.clear();
    token_tags.clear();
    pending = false;
  };
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCr(&line);
    if (line.empty()) {
      flush();
      continue;
    }
    auto where = "label file line " + std::to_string(line_no);
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorCode::kMalformedRow, where + ": expected token<TAB>tags");
    }
    std::vector<std::pair<size_t, Iob>> tags;
    for (const std::string &tag : utf8::SplitWhitespace(fields[1])) {
      if (tag == "O") continue;
      if (tag.size() < 3 || (tag[0] != 'B' && tag[0] != 'I') || tag[1] != '-') {
        throw Error(ErrorCode::kMalformedRow, where + ": bad tag '" + tag + "'");
      }
      auto index = types.IndexOf(std::string_view(tag).substr(2));
      if (!index) {
        throw Error(ErrorCode::kUnknownTag, where + ": unknown entity type in '" + tag + "'");
      }
      tags.emplace_back(*index, tag[0] == 'B' ? Iob::kB : Iob::kI);
    }
    tokens.emplace_back(fields[0]);
    token_tags.push_back(std::move(tags));
    pending = true;
  }
  if (pending) flush();
  return blocks;
}

void WriteLabelBlock(std::ostream &out, const LabelMatrix &matrix) {
  for (size_t i = 0; i < matrix.tokens.size(); ++i) {
    out << matrix.tokens[i] << '\t';
    bool any = false;
    for (size_t t = 0; t < matrix.types.size(); ++t) {
      Iob label = matrix.labels[t][i];
      if (label == Iob::kO) continue;
      if (any) out << ' ';
      out << IobChar(label) << '-' << matrix.types[t];
      any = true;
    }
    if (!any) out << 'O';
    out << '\n';
  }
  out << '\n';
}

}  // namespace arabkit::ner
