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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arabkit/error.h"
#include "arabkit/evaluation.h"
#include "arabkit/morphology.h"
#include "arabkit/ner.h"
#include "arabkit/relatedness.h"
#include "arabkit/resources.h"
#include "arabkit/script.h"
#include "arabkit/synonymy.h"
#include "arabkit/text_utils.h"
#include "arabkit/utf8.h"
#include "arabkit/wsd.h"
#include "json.hpp"

namespace arabkit::cli {

namespace {

using nlohmann::json;

// Raised for flag combinations CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  std::string format = "text";
  std::string resources;
};

struct Context {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  Common common;

  bool records() const { return common.format == "records"; }

  resources::ResourceRegistry &Registry() {
    if (!registry) {
      registry = std::make_unique<resources::ResourceRegistry>(
          common.resources.empty() ? resources::DefaultRoot()
                                   : std::filesystem::path(common.resources));
    }
    return *registry;
  }

  // The whole input, normalized.
  std::string ReadInput() {
    if (common.file.empty() || common.file == "-") {
      return script::Normalize(std::string(std::istreambuf_iterator<char>(in), {}));
    }
    return script::Normalize(ReadTextFile(common.file));
  }

  static std::string ReadTextFile(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
  }

  std::unique_ptr<resources::ResourceRegistry> registry;
};

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string Fixed4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string CodepointLabel(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

std::istringstream StreamOf(const std::string &text) { return std::istringstream(text); }

void AddCommon(CLI::App *sub, Common *common, bool with_resources = false) {
  sub->add_option("--file", common->file, "Read input from PATH instead of stdin");
  sub->add_option("--format", common->format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  if (with_resources) {
    sub->add_option("--resources", common->resources,
                    "Resource root (default: $ARABKIT_RESOURCES or ./resources)");
  }
}

// morph

struct MorphOptions {
  std::string task = "full";
  bool all = false;
  std::string dictionary;
};

json SolutionRecord(const morph::MorphSolution &s, morph::Task task) {
  json rec;
  if (task == morph::Task::kLemma || task == morph::Task::kFull) rec["lemma"] = s.lemma;
  if (task == morph::Task::kPos || task == morph::Task::kFull) rec["pos"] = s.pos;
  if (task == morph::Task::kRoot || task == morph::Task::kFull) rec["root"] = s.root;
  if (task == morph::Task::kFull) rec["frequency"] = s.frequency;
  return rec;
}

void RunMorph(Context &ctx, const MorphOptions &opt) {
  morph::Task task = *morph::ParseTask(opt.task);
  std::optional<morph::MorphDictionary> own;
  if (!opt.dictionary.empty()) {
    own = morph::MorphDictionary::Load(opt.dictionary, &ctx.Registry().TagSet());
  }
  const morph::MorphDictionary &dict = own ? *own : ctx.Registry().Dictionary();
  for (const std::string &token : utf8::SplitWhitespace(ctx.ReadInput())) {
    morph::TaggedToken tagged = morph::Analyze(token, dict);
    std::vector<morph::MorphSolution> solutions;
    if (opt.all) {
      solutions = morph::AllSolutions(token, dict);
    } else if (tagged.solution) {
      solutions.push_back(*tagged.solution);
    }
    if (ctx.records()) {
      json rec = {{"token", token}, {"source", morph::SourceName(tagged.source)}};
      json list = json::array();
      for (const auto &s : solutions) list.push_back(SolutionRecord(s, task));
      rec["solutions"] = list;
      ctx.out << rec.dump() << '\n';
      continue;
    }
    if (solutions.empty()) {
      ctx.out << morph::FormatToken({token, std::nullopt, morph::Source::kOov}, task) << '\n';
    }
    for (const auto &s : solutions) {
      ctx.out << morph::FormatToken({token, s, tagged.source}, task) << '\n';
    }
  }
}

// ner

struct NerOptions {
  std::string mode = "nested";
  std::string gazetteer;
  std::string gold;
  std::string predicted;
};

std::vector<ner::EntitySpan> ApplyMode(std::vector<ner::EntitySpan> spans,
                                       const std::string &mode,
                                       const ner::EntityTypeSet &types) {
  if (mode == "flat") return ner::ProjectFlat(std::move(spans), types);
  std::sort(spans.begin(), spans.end());
  return spans;
}

void EmitSpans(Context &ctx, size_t sentence, const std::vector<std::string> *tokens,
               const std::vector<ner::EntitySpan> &spans) {
  if (!ctx.records()) {
    ner::WriteSpanBlock(ctx.out, spans);
    return;
  }
  for (const auto &span : spans) {
    json rec = {{"sentence", sentence},
                {"start", span.start},
                {"end", span.end},
                {"type", span.type}};
    if (tokens != nullptr) {
      std::string text;
      for (size_t i = span.start; i < span.end; ++i) {
        if (i > span.start) text += ' ';
        text += (*tokens)[i];
      }
      rec["text"] = text;
    }
    ctx.out << rec.dump() << '\n';
  }
}

void RunNerTag(Context &ctx, const NerOptions &opt) {
  const ner::EntityTypeSet &types = ctx.Registry().EntityTypes();
  std::optional<ner::Gazetteer> own;
  if (!opt.gazetteer.empty()) {
    std::istringstream stream(Context::ReadTextFile(opt.gazetteer));
    own = ner::Gazetteer::Parse(stream, &types);
  }
  const ner::Gazetteer &gazetteer = own ? *own : ctx.Registry().Gazetteer();
  size_t index = 0;
  for (const std::string &line : Lines(ctx.ReadInput())) {
    std::vector<std::string> tokens = utf8::SplitWhitespace(line);
    if (tokens.empty()) continue;
    ner::LabelMatrix matrix = ner::TagGazetteer(tokens, gazetteer, types);
    EmitSpans(ctx, index++, &tokens, ApplyMode(ner::DecodeMatrix(matrix), opt.mode, types));
  }
}

void RunNerDecode(Context &ctx, const NerOptions &opt) {
  const ner::EntityTypeSet &types = ctx.Registry().EntityTypes();
  std::istringstream stream = StreamOf(ctx.ReadInput());
  size_t index = 0;
  for (const ner::LabelMatrix &matrix : ner::ReadLabelBlocks(stream, types)) {
    EmitSpans(ctx, index++, &matrix.tokens,
              ApplyMode(ner::DecodeMatrix(matrix), opt.mode, types));
  }
}

void RunNerEval(Context &ctx, const NerOptions &opt) {
  const ner::EntityTypeSet &types = ctx.Registry().EntityTypes();
  std::istringstream gold_stream(script::Normalize(Context::ReadTextFile(opt.gold)));
  std::istringstream pred_stream(opt.predicted.empty()
                                     ? ctx.ReadInput()
                                     : script::Normalize(Context::ReadTextFile(opt.predicted)));
  auto gold = ner::ReadSpanBlocks(gold_stream);
  auto pred = ner::ReadSpanBlocks(pred_stream);
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kMisalignedCorpus,
                "gold has " + std::to_string(gold.size()) + " sentences, predictions " +
                    std::to_string(pred.size()));
  }
  std::map<std::string, ner::SpanCounts> per_type;
  for (size_t i = 0; i < gold.size(); ++i) {
    auto g = ApplyMode(gold[i], opt.mode, types);
    auto p = ApplyMode(pred[i], opt.mode, types);
    std::set<std::string> seen;
    for (const auto &s : g) seen.insert(s.type);
    for (const auto &s : p) seen.insert(s.type);
    for (const std::string &type : seen) {
      std::vector<ner::EntitySpan> gt, pt;
      std::copy_if(g.begin(), g.end(), std::back_inserter(gt),
                   [&](const ner::EntitySpan &s) { return s.type == type; });
      std::copy_if(p.begin(), p.end(), std::back_inserter(pt),
                   [&](const ner::EntitySpan &s) { return s.type == type; });
      per_type[type] += ner::CountSpanMatches(gt, pt);
    }
  }
  eval::EvalReport report;
  report.metric = eval::Metric::kF1;
  for (const auto &[type, counts] : per_type) {
    report.categories.push_back(
        {type, counts.gold, counts.predicted, counts.correct, static_cast<double>(counts.gold)});
  }
  ctx.out << (ctx.records() ? report.FormatRecords() : report.FormatTable());
}

// wsd

struct WsdOptions {
  std::string inventory;
  std::string verifier = "overlap";
  std::string gold;
  std::string predicted;
};

void RunWsd(Context &ctx, const WsdOptions &opt) {
  auto &registry = ctx.Registry();
  std::optional<wsd::SenseInventory> own;
  if (!opt.inventory.empty()) own = wsd::SenseInventory::Load(opt.inventory);
  const wsd::SenseInventory &inventory = own ? *own : registry.Inventory();

  const morph::MorphDictionary *dictionary = nullptr;
  if (std::filesystem::is_regular_file(registry.PathOf(resources::kDictionaryPath))) {
    dictionary = &registry.Dictionary();
  }
  std::optional<ner::GazetteerTagger> tagger;
  if (std::filesystem::is_regular_file(registry.PathOf(resources::kGazetteerPath))) {
    tagger.emplace(registry.Gazetteer(), registry.EntityTypes());
  }

  std::unique_ptr<wsd::SenseVerifier> verifier;
  if (opt.verifier == "oracle") {
    if (opt.gold.empty()) throw UsageError("--verifier oracle requires --gold PATH");
    auto oracle = std::make_unique<wsd::OracleVerifier>();
    std::istringstream stream(script::Normalize(Context::ReadTextFile(opt.gold)));
    auto gold = wsd::ReadAnnotations(stream);
    wsd::AddGoldToOracle(oracle.get(), gold);
    verifier = std::move(oracle);
  } else {
    verifier = std::make_unique<wsd::OverlapVerifier>(dictionary);
  }

  wsd::PipelineResources res;
  res.inventory = &inventory;
  res.verifier = verifier.get();
  res.tagger = tagger ? &*tagger : nullptr;
  res.dictionary = dictionary;
  res.entity_types = &registry.EntityTypes();

  size_t index = 0;
  for (const std::string &raw : Lines(ctx.ReadInput())) {
    std::string line = utf8::Trim(raw);
    if (line.empty()) continue;
    std::vector<wsd::AnnotatedSpan> spans = wsd::Disambiguate(line, res);
    if (!ctx.records()) {
      wsd::WriteAnnotation(ctx.out, wsd::ToAnnotatedSentence(line, spans));
      continue;
    }
    std::vector<std::string> tokens = utf8::SplitWhitespace(line);
    for (const auto &s : spans) {
      std::string text;
      for (size_t i = s.span.start; i < s.span.end; ++i) {
        if (i > s.span.start) text += ' ';
        text += tokens[i];
      }
      ctx.out << json{{"sentence", index},
                      {"start", s.span.start},
                      {"end", s.span.end},
                      {"kind", wsd::SpanKindCode(s.kind)},
                      {"payload", s.payload},
                      {"text", text}}
                     .dump()
              << '\n';
    }
    ++index;
  }
}

void RunWsdEval(Context &ctx, const WsdOptions &opt) {
  std::istringstream gold_stream(script::Normalize(Context::ReadTextFile(opt.gold)));
  std::istringstream pred_stream(opt.predicted.empty()
                                     ? ctx.ReadInput()
                                     : script::Normalize(Context::ReadTextFile(opt.predicted)));
  auto gold = wsd::ReadAnnotations(gold_stream);
  auto pred = wsd::ReadAnnotations(pred_stream);
  eval::EvalReport report = wsd::EvaluateWsd(gold, pred);
  ctx.out << (ctx.records() ? report.FormatRecords() : report.FormatTable());
}

// relatedness

struct RelatednessOptions {
  std::string pairs;
  bool rescale = false;
  size_t dimension = relatedness::HashedNgramProvider::kDefaultDimension;
};

std::vector<relatedness::SentencePair> LoadPairs(Context &ctx, const RelatednessOptions &opt) {
  std::istringstream stream(opt.pairs.empty()
                                ? ctx.ReadInput()
                                : script::Normalize(Context::ReadTextFile(opt.pairs)));
  return relatedness::ReadPairs(stream);
}

void RunRelatednessScore(Context &ctx, const RelatednessOptions &opt) {
  relatedness::HashedNgramProvider provider(opt.dimension);
  for (const auto &pair : LoadPairs(ctx, opt)) {
    double score = relatedness::Relatedness(pair, provider);
    if (opt.rescale) score = relatedness::Rescale(score);
    if (ctx.records()) {
      json rec = {{"first", pair.first}, {"second", pair.second}, {"score", score}};
      if (pair.gold) rec["gold"] = *pair.gold;
      ctx.out << rec.dump() << '\n';
    } else {
      ctx.out << Fixed4(score) << '\n';
    }
  }
}

void RunRelatednessEval(Context &ctx, const RelatednessOptions &opt) {
  relatedness::HashedNgramProvider provider(opt.dimension);
  std::vector<double> gold, predicted;
  size_t row = 0;
  for (const auto &pair : LoadPairs(ctx, opt)) {
    ++row;
    if (!pair.gold) {
      throw Error(ErrorCode::kMalformedRow,
                  "pair " + std::to_string(row) + " has no gold score");
    }
    gold.push_back(*pair.gold);
    predicted.push_back(relatedness::Relatedness(pair, provider));
  }
  double rho = relatedness::Spearman(gold, predicted);
  if (ctx.records()) {
    ctx.out << json{{"pairs", gold.size()}, {"spearman", rho}}.dump() << '\n';
  } else {
    ctx.out << Fixed4(rho) << '\n';
  }
}

// syn

struct SynOptions {
  int level = 2;
  std::string language = "ar";
  std::string pairs;
  std::vector<std::string> terms;
};

void RunSyn(Context &ctx, const SynOptions &opt, bool evaluate) {
  std::optional<syn::SynonymyGraph> own;
  if (!opt.pairs.empty()) {
    std::istringstream stream(Context::ReadTextFile(opt.pairs));
    own = syn::SynonymyGraph::Parse(stream);
  }
  const syn::SynonymyGraph &graph = own ? *own : ctx.Registry().SynonymGraph();
  std::vector<std::string> terms;
  for (const auto &t : opt.terms) terms.push_back(script::Normalize(t));
  if (terms.empty()) terms = utf8::SplitWhitespace(ctx.ReadInput());
  syn::SynResult result = evaluate ? syn::SynEval(terms, opt.language, opt.level, graph)
                                   : syn::SynExtract(terms, opt.language, opt.level, graph);
  for (const auto &missing : result.missing) {
    ctx.err << "warning: '" << missing << "' is not in the graph\n";
  }
  for (const auto &r : result.results) {
    if (ctx.records()) {
      ctx.out << json{{"term", r.term.surface},
                      {"language", r.term.language},
                      {"numerator", r.score.numerator},
                      {"denominator", r.score.denominator},
                      {"score", r.score.value()}}
                     .dump()
              << '\n';
    } else {
      ctx.out << syn::FormatResult(r) << '\n';
    }
  }
}

// Script utilities.

void RunTranslit(Context &ctx, const std::string &direction) {
  const auto &table = script::BuckwalterTable::Default();
  std::string input = ctx.ReadInput();
  script::TransliterationResult result =
      direction == "arabic" ? table.FromBuckwalter(input) : table.ToBuckwalter(input);
  for (char32_t cp : result.unmapped) {
    ctx.err << "warning: unmapped character " << CodepointLabel(cp) << " passed through\n";
  }
  if (ctx.records()) {
    json unmapped = json::array();
    for (char32_t cp : result.unmapped) unmapped.push_back(CodepointLabel(cp));
    ctx.out << json{{"text", result.text}, {"unmapped", unmapped}}.dump() << '\n';
  } else {
    ctx.out << result.text;
  }
}

void RunStrip(Context &ctx, script::StripOptions options, bool all) {
  if (all) options = script::StripOptions::All();
  std::string result = script::ArStrip(ctx.ReadInput(), options);
  if (ctx.records()) {
    ctx.out << json{{"text", result}}.dump() << '\n';
  } else {
    ctx.out << result;
  }
}

struct SplitOptions {
  text::SplitConfig config;
  std::string custom;
  bool detach = false;
};

void RunSplit(Context &ctx, SplitOptions opt) {
  opt.config.custom = utf8::Decode(opt.custom);
  opt.config.attach_separator = !opt.detach;
  if (opt.config.empty()) {
    opt.config.period = opt.config.question = opt.config.exclamation = true;
  }
  for (const std::string &sentence : text::SplitSentences(ctx.ReadInput(), opt.config)) {
    if (ctx.records()) {
      ctx.out << json{{"sentence", sentence}}.dump() << '\n';
    } else {
      ctx.out << sentence << '\n';
    }
  }
}

// Pairs come from two positional arguments or from TAB-separated input lines.
std::vector<std::pair<std::string, std::string>> PairInput(Context &ctx,
                                                           const std::vector<std::string> &args) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!args.empty()) {
    if (args.size() != 2) throw UsageError("expected exactly two arguments");
    pairs.emplace_back(script::Normalize(args[0]), script::Normalize(args[1]));
    return pairs;
  }
  size_t row = 0;
  for (const std::string &line : Lines(ctx.ReadInput())) {
    ++row;
    if (utf8::Trim(line).empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedRow,
                  "line " + std::to_string(row) + ": expected two TAB-separated fields");
    }
    pairs.emplace_back(utf8::Trim(line.substr(0, tab)), utf8::Trim(line.substr(tab + 1)));
  }
  return pairs;
}

void RunMatch(Context &ctx, const std::vector<std::string> &args) {
  for (const auto &[first, second] : PairInput(ctx, args)) {
    text::MatchVerdict verdict = text::MatchWords(first, second);
    if (ctx.records()) {
      json rec = {{"first", first},
                  {"second", second},
                  {"relation", text::RelationName(verdict.relation)}};
      rec["first_conflict"] =
          verdict.first_conflict ? json(*verdict.first_conflict) : json(nullptr);
      ctx.out << rec.dump() << '\n';
    } else {
      ctx.out << text::RelationName(verdict.relation);
      if (verdict.first_conflict) ctx.out << '\t' << *verdict.first_conflict;
      ctx.out << '\n';
    }
  }
}

void RunJaccard(Context &ctx, const std::vector<std::string> &args, const std::string &mode) {
  text::JaccardMode jm = mode == "exact" ? text::JaccardMode::kExact
                                         : text::JaccardMode::kDiacriticAware;
  for (const auto &[first, second] : PairInput(ctx, args)) {
    text::JaccardReport r =
        text::Jaccard(utf8::SplitWhitespace(first), utf8::SplitWhitespace(second), jm);
    if (ctx.records()) {
      ctx.out << json{{"intersection", r.intersection_size},
                      {"union", r.union_size},
                      {"similarity", r.similarity}}
                     .dump()
              << '\n';
    } else {
      ctx.out << Fixed4(r.similarity) << '\n';
    }
  }
}

void RunDedup(Context &ctx, double threshold) {
  std::vector<std::string> sentences = Lines(ctx.ReadInput());
  for (const std::string &kept : text::RemoveDuplicates(sentences, threshold)) {
    if (ctx.records()) {
      ctx.out << json{{"sentence", kept}}.dump() << '\n';
    } else {
      ctx.out << kept << '\n';
    }
  }
}

// resources

void RunInstall(Context &ctx, const std::string &archive) {
  resources::InstallSummary summary =
      resources::InstallArchive(archive, ctx.Registry().root());
  const std::pair<const char *, const std::vector<std::string> *> groups[] = {
      {"added", &summary.added}, {"updated", &summary.updated}, {"unchanged", &summary.unchanged}};
  for (const auto &[label, list] : groups) {
    for (const std::string &path : *list) {
      if (ctx.records()) {
        ctx.out << json{{"status", label}, {"path", path}}.dump() << '\n';
      } else {
        ctx.out << label << '\t' << path << '\n';
      }
    }
  }
  ctx.err << summary.added.size() << " added, " << summary.updated.size() << " updated, "
          << summary.unchanged.size() << " unchanged under " << ctx.Registry().root().string()
          << '\n';
}

void RunPack(Context &ctx, const std::string &directory, const std::string &output) {
  auto entries = resources::CollectDirectory(directory);
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + output + "'");
  resources::WriteTar(out, entries);
  ctx.err << entries.size() << " files packed into " << output << '\n';
}

void RunStatus(Context &ctx) {
  auto &registry = ctx.Registry();
  for (std::string_view rel :
       {resources::kDictionaryPath, resources::kTagSetPath, resources::kGazetteerPath,
        resources::kEntityTypesPath, resources::kInventoryPath, resources::kSynonymPairsPath}) {
    std::filesystem::path path = registry.PathOf(rel);
    bool present = std::filesystem::is_regular_file(path);
    if (ctx.records()) {
      ctx.out << json{{"resource", rel}, {"path", path.string()}, {"present", present}}.dump()
              << '\n';
    } else {
      ctx.out << (present ? "present" : "missing") << '\t' << path.string() << '\n';
    }
  }
}

// eval

void RunEval(Context &ctx) {
  std::vector<eval::WeightedScore> scores;
  size_t row = 0;
  for (const std::string &line : Lines(ctx.ReadInput())) {
    ++row;
    std::string trimmed = utf8::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::istringstream fields(trimmed);
    std::string score_text;
    double weight = 0.0;
    std::string rest;
    if (!(fields >> score_text >> weight) || (fields >> rest)) {
      throw Error(ErrorCode::kMalformedRow,
                  "line " + std::to_string(row) + ": expected `score weight`");
    }
    bool percent = !score_text.empty() && score_text.back() == '%';
    if (percent) score_text.pop_back();
    double score = 0.0;
    try {
      size_t used = 0;
      score = std::stod(score_text, &used);
      if (used != score_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw Error(ErrorCode::kMalformedRow,
                  "line " + std::to_string(row) + ": bad score '" + score_text + "'");
    }
    scores.push_back({percent ? score / 100.0 : score, weight});
  }
  double average = eval::MicroAverage(scores);
  if (ctx.records()) {
    ctx.out << json{{"categories", scores.size()}, {"micro_average", average}}.dump() << '\n';
  } else {
    ctx.out << eval::FormatPercent(average) << '\n';
  }
}

}  // namespace

int Run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Arabic NLP toolkit", "arabkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Context ctx{in, out, err, {}, nullptr};
  Common &common = ctx.common;
  std::function<void()> action;

  // morph
  MorphOptions morph_opt;
  auto *morph_cmd = app.add_subcommand("morph", "Lemma, POS and root lookup per token");
  morph_cmd->add_option("--task", morph_opt.task, "What to print")
      ->check(CLI::IsMember({"lemma", "pos", "root", "full"}));
  morph_cmd->add_flag("--all", morph_opt.all, "Print every solution, not only the first");
  morph_cmd->add_option("--dict", morph_opt.dictionary, "Dictionary TSV (default: resources)");
  AddCommon(morph_cmd, &common, true);
  morph_cmd->callback([&] { action = [&] { RunMorph(ctx, morph_opt); }; });

  // ner
  NerOptions ner_opt;
  auto *ner_cmd = app.add_subcommand("ner", "Named entity tagging, decoding and scoring");
  ner_cmd->require_subcommand(1);
  auto mode_option = [&](CLI::App *sub) {
    sub->add_option("--mode", ner_opt.mode, "Span output mode")
        ->check(CLI::IsMember({"flat", "nested"}));
  };
  auto *ner_tag = ner_cmd->add_subcommand("tag", "Tag sentences with the gazetteer");
  mode_option(ner_tag);
  ner_tag->add_option("--gazetteer", ner_opt.gazetteer, "Gazetteer TSV (default: resources)");
  AddCommon(ner_tag, &common, true);
  ner_tag->callback([&] { action = [&] { RunNerTag(ctx, ner_opt); }; });
  auto *ner_decode = ner_cmd->add_subcommand("decode", "Decode per-type IOB label blocks");
  mode_option(ner_decode);
  AddCommon(ner_decode, &common, true);
  ner_decode->callback([&] { action = [&] { RunNerDecode(ctx, ner_opt); }; });
  auto *ner_eval = ner_cmd->add_subcommand("eval", "Span-level precision, recall and F1");
  mode_option(ner_eval);
  ner_eval->add_option("--gold", ner_opt.gold, "Gold span file")->required();
  ner_eval->add_option("--pred", ner_opt.predicted, "Predicted span file (default: input)");
  AddCommon(ner_eval, &common, true);
  ner_eval->callback([&] { action = [&] { RunNerEval(ctx, ner_opt); }; });

  // wsd
  WsdOptions wsd_opt;
  auto *wsd_cmd = app.add_subcommand("wsd", "Word sense disambiguation");
  wsd_cmd->add_option("--inventory", wsd_opt.inventory, "Sense inventory (default: resources)");
  wsd_cmd->add_option("--verifier", wsd_opt.verifier, "Sense verifier")
      ->check(CLI::IsMember({"overlap", "oracle"}));
  wsd_cmd->add_option("--gold", wsd_opt.gold, "Gold annotations (needed by the oracle)");
  AddCommon(wsd_cmd, &common, true);
  wsd_cmd->callback([&] {
    if (wsd_cmd->get_subcommands().empty()) action = [&] { RunWsd(ctx, wsd_opt); };
  });
  auto *wsd_eval = wsd_cmd->add_subcommand("eval", "Score annotations against gold");
  wsd_eval->add_option("--gold", wsd_opt.gold, "Gold annotation file")->required();
  wsd_eval->add_option("--pred", wsd_opt.predicted, "Predicted annotations (default: input)");
  AddCommon(wsd_eval, &common);
  wsd_eval->callback([&] { action = [&] { RunWsdEval(ctx, wsd_opt); }; });

  // relatedness
  RelatednessOptions rel_opt;
  auto *rel_cmd = app.add_subcommand("relatedness", "Sentence relatedness");
  rel_cmd->require_subcommand(1);
  auto rel_common = [&](CLI::App *sub) {
    sub->add_option("--pairs", rel_opt.pairs, "Pair file (default: input)");
    sub->add_option("--dim", rel_opt.dimension, "Hashed embedding dimension")
        ->check(CLI::PositiveNumber);
    AddCommon(sub, &common);
  };
  auto *rel_score = rel_cmd->add_subcommand("score", "Cosine score per pair");
  rel_common(rel_score);
  rel_score->add_flag("--rescale", rel_opt.rescale, "Map cosine from [-1,1] onto [0,1]");
  rel_score->callback([&] { action = [&] { RunRelatednessScore(ctx, rel_opt); }; });
  auto *rel_eval = rel_cmd->add_subcommand("eval", "Spearman correlation against gold");
  rel_common(rel_eval);
  rel_eval->callback([&] { action = [&] { RunRelatednessEval(ctx, rel_opt); }; });

  // syn
  SynOptions syn_opt;
  auto *syn_cmd = app.add_subcommand("syn", "Synonym extraction over translation graphs");
  syn_cmd->require_subcommand(1);
  auto syn_common = [&](CLI::App *sub) {
    sub->add_option("--level", syn_opt.level, "Cycle level (max cycle length 2*level)")
        ->check(CLI::IsMember({2, 3}));
    sub->add_option("--lang", syn_opt.language, "Language of seeds and results");
    sub->add_option("--pairs", syn_opt.pairs, "Pair TSV (default: resources)");
    sub->add_option("terms", syn_opt.terms, "Terms (default: whitespace-separated input)");
    AddCommon(sub, &common, true);
  };
  auto *syn_extract = syn_cmd->add_subcommand("extract", "Synonyms of a seed set");
  syn_common(syn_extract);
  syn_extract->callback([&] { action = [&] { RunSyn(ctx, syn_opt, false); }; });
  auto *syn_eval = syn_cmd->add_subcommand("eval", "Score each term against the others");
  syn_common(syn_eval);
  syn_eval->callback([&] { action = [&] { RunSyn(ctx, syn_opt, true); }; });

  // translit
  std::string direction = "buckwalter";
  auto *translit_cmd = app.add_subcommand("translit", "Buckwalter transliteration");
  translit_cmd->add_option("--to", direction, "Target script")
      ->check(CLI::IsMember({"buckwalter", "arabic"}));
  AddCommon(translit_cmd, &common);
  translit_cmd->callback([&] { action = [&] { RunTranslit(ctx, direction); }; });

  // strip
  script::StripOptions strip_opt;
  bool strip_all = false;
  auto *strip_cmd = app.add_subcommand("strip", "Remove selected character classes");
  strip_cmd->add_flag("--diacritics", strip_opt.diacritics, "Vowel marks and other Arabic marks");
  strip_cmd->add_flag("--shaddah", strip_opt.shaddah, "Shaddah");
  strip_cmd->add_flag("--digits", strip_opt.digits, "ASCII and Arabic-Indic digits");
  strip_cmd->add_flag("--alif", strip_opt.unify_alif, "Map alif variants to bare alif");
  strip_cmd->add_flag("--special", strip_opt.special_chars, "Punctuation and symbols");
  strip_cmd->add_flag("--tatweel", strip_opt.tatweel, "Tatweel");
  strip_cmd->add_flag("--all", strip_all, "Every flag above");
  AddCommon(strip_cmd, &common);
  strip_cmd->callback([&] { action = [&] { RunStrip(ctx, strip_opt, strip_all); }; });

  // split
  SplitOptions split_opt;
  auto *split_cmd = app.add_subcommand("split", "Sentence splitting");
  split_cmd->add_flag("--period", split_opt.config.period, "Split on . and ۔");
  split_cmd->add_flag("--question", split_opt.config.question, "Split on ? and ؟");
  split_cmd->add_flag("--exclamation", split_opt.config.exclamation, "Split on !");
  split_cmd->add_flag("--newline", split_opt.config.line_break, "Split on line breaks");
  split_cmd->add_option("--custom", split_opt.custom, "Extra separator characters");
  split_cmd->add_flag("--detach", split_opt.detach, "Drop separators from the output");
  AddCommon(split_cmd, &common);
  split_cmd->callback([&] { action = [&] { RunSplit(ctx, split_opt); }; });

  // match
  std::vector<std::string> match_args;
  auto *match_cmd = app.add_subcommand("match", "Diacritic-aware comparison of two words");
  match_cmd->add_option("words", match_args, "Two words (default: TAB-separated input lines)");
  AddCommon(match_cmd, &common);
  match_cmd->callback([&] { action = [&] { RunMatch(ctx, match_args); }; });

  // jaccard
  std::vector<std::string> jaccard_args;
  std::string jaccard_mode = "diacritic";
  auto *jaccard_cmd = app.add_subcommand("jaccard", "Jaccard similarity of two word lists");
  jaccard_cmd->add_option("lists", jaccard_args,
                          "Two space-separated word lists (default: TAB-separated input)");
  jaccard_cmd->add_option("--mode", jaccard_mode, "Word equality")
      ->check(CLI::IsMember({"exact", "diacritic"}));
  AddCommon(jaccard_cmd, &common);
  jaccard_cmd->callback([&] { action = [&] { RunJaccard(ctx, jaccard_args, jaccard_mode); }; });

  // dedup
  double threshold = text::kDefaultDedupThreshold;
  auto *dedup_cmd = app.add_subcommand("dedup", "Drop near-duplicate sentences");
  dedup_cmd->add_option("--threshold", threshold, "Cosine at or above which a line is dropped");
  AddCommon(dedup_cmd, &common);
  dedup_cmd->callback([&] { action = [&] { RunDedup(ctx, threshold); }; });

  // resources
  std::string archive, pack_dir, pack_out;
  auto *res_cmd = app.add_subcommand("resources", "Manage the resource directory");
  res_cmd->require_subcommand(1);
  auto *res_install = res_cmd->add_subcommand("install", "Unpack a tar resource pack");
  res_install->add_option("archive", archive, "Uncompressed tar file")->required();
  res_install->add_option("--resources", common.resources, "Resource root");
  res_install->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  res_install->callback([&] { action = [&] { RunInstall(ctx, archive); }; });
  auto *res_pack = res_cmd->add_subcommand("pack", "Create a tar resource pack");
  res_pack->add_option("directory", pack_dir, "Directory to pack")->required();
  res_pack->add_option("output", pack_out, "Tar file to write")->required();
  res_pack->callback([&] { action = [&] { RunPack(ctx, pack_dir, pack_out); }; });
  auto *res_status = res_cmd->add_subcommand("status", "Show which resources are present");
  res_status->add_option("--resources", common.resources, "Resource root");
  res_status->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  res_status->callback([&] { action = [&] { RunStatus(ctx); }; });

  // eval
  auto *eval_cmd = app.add_subcommand("eval", "Micro average of weighted category scores");
  AddCommon(eval_cmd, &common);
  eval_cmd->callback([&] { action = [&] { RunEval(ctx); }; });

  std::vector<std::string> argv_store{"arabkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    const CLI::App *failing = &app;
    // Show the usage of the deepest subcommand that was reached.
    while (true) {
      auto subs = failing->get_subcommands();
      if (subs.empty()) break;
      failing = subs.front();
    }
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (!action) throw UsageError("no subcommand given");
    action();
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace arabkit::cli
