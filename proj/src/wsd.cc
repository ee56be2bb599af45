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

#include "arabkit/wsd.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/utf8.h"

namespace arabkit::wsd {

namespace {

std::string KeyForm(std::string_view lemma) {
  return script::StripDiacritics(script::Normalize(lemma));
}

std::vector<std::string_view> SplitTabs(std::string_view line, size_t max_fields) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (fields.size() + 1 < max_fields) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) break;
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  fields.push_back(line.substr(start));
  return fields;
}

std::string Lemmatize(const std::string &token, const morph::MorphDictionary *dict) {
  if (dict != nullptr) {
    morph::TaggedToken tagged = morph::Analyze(token, *dict);
    if (tagged.solution) return tagged.solution->lemma;
  }
  return token;
}

}  // namespace

std::string SenseInventory::Key(std::span<const std::string> lemmas) {
  std::string key;
  for (const auto &lemma : lemmas) {
    if (!key.empty()) key.push_back(' ');
    key += KeyForm(lemma);
  }
  return key;
}

void SenseInventory::Add(Kind kind, std::string_view lemmas, Gloss gloss) {
  std::vector<std::string> parts = utf8::SplitWhitespace(lemmas);
  if (kind == Kind::kMultiword && (parts.size() < kMinNgram || parts.size() > kMaxNgram)) {
    throw Error(ErrorCode::kMalformedRow, "multi-word entries need 2 to 5 lemmas");
  }
  if (kind == Kind::kSingleword && parts.size() != 1) {
    throw Error(ErrorCode::kMalformedRow, "single-word entries need exactly 1 lemma");
  }
  if (gloss.id.empty()) throw Error(ErrorCode::kMalformedRow, "empty gloss id");
  auto &list = (kind == Kind::kMultiword ? multiword_ : singleword_)[Key(parts)];
  for (const Gloss &g : list) {
    if (g.id == gloss.id) {
      throw Error(ErrorCode::kMalformedRow, "duplicate gloss id '" + gloss.id + "'");
    }
  }
  list.push_back(std::move(gloss));
}

SenseInventory SenseInventory::Parse(std::istream &in) {
  SenseInventory inventory;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::Trim(line).empty() || line.front() == '#') continue;
    auto where = "inventory line " + std::to_string(line_no) + ": ";
    auto fields = SplitTabs(line, 4);
    if (fields.size() != 4) {
      throw Error(ErrorCode::kMalformedRow, where + "expected 4 tab-separated fields");
    }
    Kind kind;
    if (fields[0] == "MW") {
      kind = Kind::kMultiword;
    } else if (fields[0] == "SW") {
      kind = Kind::kSingleword;
    } else {
      throw Error(ErrorCode::kMalformedRow, where + "kind must be MW or SW");
    }
    try {
      inventory.Add(kind, fields[1], {std::string(fields[2]), std::string(fields[3])});
    } catch (const Error &e) {
      throw Error(ErrorCode::kMalformedRow, where + e.what());
    }
  }
  return inventory;
}

SenseInventory SenseInventory::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kResourceNotFound, "cannot open inventory '" + path.string() + "'");
  }
  return Parse(in);
}

const std::vector<Gloss> *SenseInventory::FindMultiword(std::span<const std::string> lemmas) const {
  auto it = multiword_.find(Key(lemmas));
  return it == multiword_.end() ? nullptr : &it->second;
}

const std::vector<Gloss> *SenseInventory::FindSingleword(std::string_view lemma) const {
  auto it = singleword_.find(KeyForm(lemma));
  return it == singleword_.end() ? nullptr : &it->second;
}

std::vector<NgramSpan> GenerateNgrams(std::span<const std::string> lemmas) {
  std::vector<NgramSpan> spans;
  const size_t t = lemmas.size();
  for (size_t n = kMinNgram; n <= std::min(kMaxNgram, t); ++n) {
    for (size_t start = 0; start + n <= t; ++start) {
      spans.push_back({{start, start + n},
                       std::vector<std::string>(lemmas.begin() + start,
                                                lemmas.begin() + start + n)});
    }
  }
  return spans;
}

std::vector<MultiwordMatch> LookupMultiword(std::span<const NgramSpan> spans,
                                            const SenseInventory &inventory) {
  std::vector<const NgramSpan *> order;
  for (const auto &s : spans) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](const NgramSpan *a, const NgramSpan *b) {
    if (a->n() != b->n()) return a->n() > b->n();
    return a->span.start < b->span.start;
  });
  std::vector<MultiwordMatch> accepted;
  for (const NgramSpan *s : order) {
    bool overlaps = std::any_of(accepted.begin(), accepted.end(), [&](const MultiwordMatch &m) {
      return m.ngram.span.start < s->span.end && s->span.start < m.ngram.span.end;
    });
    if (overlaps) continue;
    if (const auto *glosses = inventory.FindMultiword(s->lemmas)) {
      accepted.push_back({*s, *glosses});
    }
  }
  std::sort(accepted.begin(), accepted.end(), [](const auto &a, const auto &b) {
    return a.ngram.span.start < b.ngram.span.start;
  });
  return accepted;
}

VerificationPair Verify(std::string_view context, const Gloss &gloss,
                        const SenseVerifier &verifier, TokenSpan target) {
  double positive;
  try {
    positive = verifier.PositiveProbability(context, target, gloss);
  } catch (const Error &) {
    throw;
  } catch (const std::exception &e) {
    throw Error(ErrorCode::kVerifierFailure, e.what());
  }
  if (!(positive >= 0.0 && positive <= 1.0)) {
    throw Error(ErrorCode::kVerifierFailure,
                "positive probability out of range for gloss '" + gloss.id + "'");
  }
  return {std::string(context), gloss, positive, 1.0 - positive};
}

OverlapVerifier::OverlapVerifier(const morph::MorphDictionary *dict, double epsilon)
    : dict_(dict), epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in [0, 0.5)");
  }
}

std::set<std::string> OverlapVerifier::LemmaSet(std::string_view text) const {
  script::StripOptions options = script::StripOptions::All();
  options.digits = false;
  std::set<std::string> lemmas;
  for (const std::string &token : utf8::SplitWhitespace(text)) {
    std::string lemma = Lemmatize(token, dict_);
    std::string key = script::ArStrip(lemma, options);
    if (!key.empty()) lemmas.insert(std::move(key));
  }
  return lemmas;
}

double OverlapVerifier::PositiveProbability(std::string_view context, TokenSpan,
                                            const Gloss &gloss) const {
  std::set<std::string> gloss_lemmas = LemmaSet(gloss.text);
  if (gloss_lemmas.empty()) return epsilon_;
  std::set<std::string> context_lemmas = LemmaSet(context);
  size_t shared = 0;
  for (const auto &lemma : gloss_lemmas) shared += context_lemmas.count(lemma);
  double overlap = static_cast<double>(shared) / static_cast<double>(gloss_lemmas.size());
  return epsilon_ + (1.0 - 2.0 * epsilon_) * overlap;
}

void OracleVerifier::AddGold(std::string_view context, TokenSpan target,
                             std::vector<std::string> gloss_ids) {
  auto &ids = gold_[{utf8::Trim(context), target.start, target.end}];
  ids.insert(gloss_ids.begin(), gloss_ids.end());
}

double OracleVerifier::PositiveProbability(std::string_view context, TokenSpan target,
                                           const Gloss &gloss) const {
  auto it = gold_.find({utf8::Trim(context), target.start, target.end});
  if (it == gold_.end()) return 0.0;
  return it->second.count(gloss.id) ? 1.0 : 0.0;
}

Gloss SelectSense(std::span<const VerificationPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCandidates, "no candidate glosses");
  const VerificationPair *best = &pairs.front();
  for (const auto &pair : pairs.subspan(1)) {
    if (pair.positive > best->positive ||
        (pair.positive == best->positive && pair.gloss.id < best->gloss.id)) {
      best = &pair;
    }
  }
  return best->gloss;
}

std::string_view SpanKindCode(SpanKind kind) {
  switch (kind) {
    case SpanKind::kNamedEntity: return "NE";
    case SpanKind::kMultiWordSense: return "MW";
    case SpanKind::kSingleWordSense: return "SW";
  }
  return "";
}

std::optional<SpanKind> ParseSpanKind(std::string_view code) {
  if (code == "NE") return SpanKind::kNamedEntity;
  if (code == "MW") return SpanKind::kMultiWordSense;
  if (code == "SW") return SpanKind::kSingleWordSense;
  return std::nullopt;
}

namespace {

std::string Disambiguated(std::string_view sentence, TokenSpan target,
                          const std::vector<Gloss> &glosses, const SenseVerifier &verifier) {
  std::vector<VerificationPair> pairs;
  pairs.reserve(glosses.size());
  for (const Gloss &g : glosses) pairs.push_back(Verify(sentence, g, verifier, target));
  return SelectSense(pairs).id;
}

}  // namespace

std::vector<AnnotatedSpan> Disambiguate(std::string_view sentence,
                                        const PipelineResources &resources) {
  if (resources.inventory == nullptr) {
    throw Error(ErrorCode::kResourceNotFound, "sense inventory not loaded");
  }
  if (resources.verifier == nullptr) {
    throw Error(ErrorCode::kResourceNotFound, "sense verifier not configured");
  }
  const std::vector<std::string> tokens = utf8::SplitWhitespace(sentence);
  const std::string context = utf8::Trim(sentence);

  // Lemmatize, then enumerate 2..5-grams.
  std::vector<std::string> lemmas;
  lemmas.reserve(tokens.size());
  for (const auto &t : tokens) lemmas.push_back(Lemmatize(t, resources.dictionary));
  std::vector<NgramSpan> ngrams = GenerateNgrams(lemmas);

  // Multi-word expressions claim their tokens first.
  std::vector<AnnotatedSpan> out;
  std::vector<bool> consumed(tokens.size(), false);
  std::vector<MultiwordMatch> multiword = LookupMultiword(ngrams, *resources.inventory);
  for (const auto &m : multiword) {
    for (size_t i = m.ngram.span.start; i < m.ngram.span.end; ++i) consumed[i] = true;
  }

  // Entities are cropped to the tokens multi-word matches left over.
  if (resources.tagger != nullptr) {
    ner::LabelMatrix matrix = resources.tagger->Classify(tokens);
    if (!matrix.Valid() || matrix.tokens.size() != tokens.size()) {
      throw Error(ErrorCode::kTaggerFailure, "tagger returned a malformed label matrix");
    }
    const ner::EntityTypeSet &order = resources.entity_types != nullptr
                                          ? *resources.entity_types
                                          : ner::EntityTypeSet::Default();
    for (const auto &entity : ner::ProjectFlat(ner::DecodeMatrix(matrix), order)) {
      TokenSpan best{0, 0};
      size_t i = entity.start;
      while (i < entity.end) {
        if (consumed[i]) {
          ++i;
          continue;
        }
        size_t j = i;
        while (j < entity.end && !consumed[j]) ++j;
        if (j - i > best.length()) best = {i, j};
        i = j;
      }
      if (best.length() == 0) continue;
      out.push_back({best, SpanKind::kNamedEntity, entity.type});
    }
    for (const auto &a : out) {
      for (size_t i = a.span.start; i < a.span.end; ++i) consumed[i] = true;
    }
  }

  // Pick a sense for each multi-word match.
  for (const auto &m : multiword) {
    out.push_back({m.ngram.span, SpanKind::kMultiWordSense,
                   Disambiguated(context, m.ngram.span, m.glosses, *resources.verifier)});
  }

  // Single-word senses for whatever is still unclaimed.
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (consumed[i]) continue;
    const auto *glosses = resources.inventory->FindSingleword(lemmas[i]);
    if (glosses == nullptr) continue;
    TokenSpan target{i, i + 1};
    out.push_back({target, SpanKind::kSingleWordSense,
                   Disambiguated(context, target, *glosses, *resources.verifier)});
  }

  std::sort(out.begin(), out.end());
  return out;
}

size_t AnnotatedSentence::token_count() const { return utf8::SplitWhitespace(text).size(); }

AnnotatedSentence ToAnnotatedSentence(std::string text, std::span<const AnnotatedSpan> spans) {
  AnnotatedSentence sentence{utf8::Trim(text), {}};
  for (const auto &s : spans) sentence.spans.push_back({s.span, s.kind, {s.payload}});
  return sentence;
}

namespace {

bool PayloadMatches(const GoldSpan &gold, const GoldSpan &pred) {
  for (const auto &p : pred.accepted) {
    if (std::find(gold.accepted.begin(), gold.accepted.end(), p) != gold.accepted.end()) {
      return true;
    }
  }
  return false;
}

}  // namespace

eval::EvalReport EvaluateWsd(std::span<const AnnotatedSentence> gold,
                             std::span<const AnnotatedSentence> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kMisalignedCorpus,
                std::to_string(gold.size()) + " gold vs " + std::to_string(predicted.size()) +
                    " predicted sentences");
  }
  eval::EvalReport report;
  report.metric = eval::Metric::kAccuracy;
  report.categories = {{"ner"}, {"multiword"}, {"singleword"}};
  auto index = [](SpanKind kind) { return static_cast<size_t>(kind); };

  for (size_t s = 0; s < gold.size(); ++s) {
    const AnnotatedSentence &g = gold[s];
    const AnnotatedSentence &p = predicted[s];
    if (g.token_count() != p.token_count() || utf8::Trim(g.text) != utf8::Trim(p.text)) {
      throw Error(ErrorCode::kMisalignedCorpus,
                  "sentence " + std::to_string(s + 1) + " differs between gold and prediction");
    }
    for (const auto &gs : g.spans) {
      eval::CategoryCounts &cat = report.categories[index(gs.kind)];
      // Single-word senses count per token, the others per span.
      cat.gold += 1;
      cat.weight += static_cast<double>(gs.span.length());
      bool hit = std::any_of(p.spans.begin(), p.spans.end(), [&](const GoldSpan &ps) {
        return ps.kind == gs.kind && ps.span == gs.span && PayloadMatches(gs, ps);
      });
      if (hit) cat.correct += 1;
    }
    for (const auto &ps : p.spans) report.categories[index(ps.kind)].predicted += 1;
  }
  return report;
}

double WsdAccuracy(std::span<const AnnotatedSentence> gold,
                   std::span<const AnnotatedSentence> predicted, Category category) {
  eval::EvalReport report = EvaluateWsd(gold, predicted);
  switch (category) {
    case Category::kNer: return report.categories[0].accuracy();
    case Category::kMultiword: return report.categories[1].accuracy();
    case Category::kSingleword: return report.categories[2].accuracy();
    case Category::kOverall: return report.Overall();
  }
  return 0.0;
}

std::vector<AnnotatedSentence> ReadAnnotations(std::istream &in) {
  std::vector<AnnotatedSentence> corpus;
  std::optional<AnnotatedSentence> current;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto where = "annotation line " + std::to_string(line_no) + ": ";
    if (line.empty()) {
      if (current) corpus.push_back(std::move(*current));
      current.reset();
      continue;
    }
    if (line.rfind("# ", 0) == 0 || line == "#") {
      if (current) throw Error(ErrorCode::kMalformedRow, where + "block has two text lines");
      current = AnnotatedSentence{utf8::Trim(std::string_view(line).substr(1)), {}};
      continue;
    }
    if (!current) throw Error(ErrorCode::kMalformedRow, where + "block must start with '# text'");
    auto fields = SplitTabs(line, 4);
    if (fields.size() != 4) {
      throw Error(ErrorCode::kMalformedRow, where + "expected start<TAB>end<TAB>kind<TAB>payload");
    }
    GoldSpan span;
    for (auto [field, out] : {std::pair{fields[0], &span.span.start},
                              std::pair{fields[1], &span.span.end}}) {
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), *out);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::kMalformedRow, where + "bad token index");
      }
    }
    auto kind = ParseSpanKind(fields[2]);
    if (!kind) throw Error(ErrorCode::kMalformedRow, where + "kind must be NE, MW or SW");
    span.kind = *kind;
    size_t start = 0;
    std::string_view payload = fields[3];
    while (true) {
      size_t bar = payload.find('|', start);
      std::string item(payload.substr(start, bar == std::string_view::npos ? bar : bar - start));
      if (!item.empty()) span.accepted.push_back(std::move(item));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (span.accepted.empty()) throw Error(ErrorCode::kMalformedRow, where + "empty payload");
    if (span.span.start >= span.span.end || span.span.end > current->token_count()) {
      throw Error(ErrorCode::kMalformedRow, where + "span outside the sentence");
    }
    current->spans.push_back(std::move(span));
  }
  if (current) corpus.push_back(std::move(*current));
  return corpus;
}

void WriteAnnotation(std::ostream &out, const AnnotatedSentence &sentence) {
  out << "# " << sentence.text << '\n';
  for (const auto &s : sentence.spans) {
    out << s.span.start << '\t' << s.span.end << '\t' << SpanKindCode(s.kind) << '\t';
    for (size_t i = 0; i < s.accepted.size(); ++i) {
      if (i) out << '|';
      out << s.accepted[i];
    }
    out << '\n';
  }
  out << '\n';
}

void AddGoldToOracle(OracleVerifier *oracle, std::span<const AnnotatedSentence> gold) {
  for (const auto &sentence : gold) {
    for (const auto &span : sentence.spans) {
      if (span.kind == SpanKind::kNamedEntity) continue;
      oracle->AddGold(sentence.text, span.span, span.accepted);
    }
  }
}

}  // namespace arabkit::wsd
